#pragma once

// Packaged example algebras.

#include <map>
#include <string>
#include <vector>

#include "syzex/algebra.hpp"
#include "syzex/rep.hpp"

namespace syzex {

struct CorpusEntry {
    std::string id;
    std::string title;
    AlgebraSpec spec;
    /// Named modules as expressions understood by parse_module_expression.
    std::map<std::string, std::string> modules;
    std::vector<std::string> notes;
    /// Excluded from default test runs.
    bool heavy = false;
};

std::vector<std::string> corpus_ids();

/// Looks up an entry. Parameterized entries accept a suffix, e.g. "nodeA:7"
/// or "xiA:3"; without it the default parameter is used.
CorpusEntry load_corpus(const std::string& id);
bool is_corpus_id(const std::string& id);

/// Module from an expression such as "S2+P3^2+A": terms are S<v>, P<v>,
/// I<v> (simple, projective, injective at vertex label v), A (regular
/// module), 0, or a name from `named`; "^k" repeats a term.
Representation parse_module_expression(const AlgebraPtr& a, const std::string& expr,
                                       const std::map<std::string, std::string>& named = {});

} // namespace syzex
