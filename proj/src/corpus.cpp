#include "syzex/corpus.hpp"

#include <algorithm>
#include <cctype>

#include "syzex/error.hpp"

namespace syzex {

namespace {

using Term = AlgebraSpec::TermSpec;

std::vector<Term> mono(std::vector<std::string> path)
{
    return {Term{1, std::move(path)}};
}

std::vector<Term> binomial(std::vector<std::string> a, std::vector<std::string> b)
{
    return {Term{1, std::move(a)}, Term{-1, std::move(b)}};
}

CorpusEntry kron2()
{
    CorpusEntry e{"kron2", "Kronecker algebra with two arrows", {}, {}, {}, false};
    e.spec.vertices = {"0", "1"};
    e.spec.arrows = {{"x0", "0", "1"}, {"x1", "0", "1"}};
    e.spec.comment = "path algebra of the Kronecker quiver 0 => 1";
    return e;
}

CorpusEntry beilinson2()
{
    CorpusEntry e{"beilinson2", "Beilinson algebra, n = 2", {}, {}, {}, false};
    e.spec.vertices = {"0", "1", "2"};
    for (int l = 1; l <= 2; ++l)
        for (int i = 0; i < 3; ++i)
            e.spec.arrows.push_back({"x" + std::to_string(i) + "_" + std::to_string(l), std::to_string(l - 1), std::to_string(l)});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const auto xi1 = "x" + std::to_string(i) + "_1", xj1 = "x" + std::to_string(j) + "_1";
            const auto xi2 = "x" + std::to_string(i) + "_2", xj2 = "x" + std::to_string(j) + "_2";
            e.spec.relations.push_back(binomial({xi1, xj2}, {xj1, xi2}));
        }
    e.spec.comment = "relations x_i^(l) x_j^(l+1) - x_j^(l) x_i^(l+1), read left to right";
    return e;
}

CorpusEntry fivevertex()
{
    CorpusEntry e{"fivevertex", "representation-finite algebra on five vertices", {}, {}, {}, false};
    e.spec.vertices = {"1", "2", "3", "4", "5"};
    e.spec.arrows = {{"alpha", "2", "1"}, {"beta1", "3", "2"}, {"beta2", "4", "2"}, {"beta3", "5", "2"}};
    for (int i = 1; i <= 3; ++i)
        e.spec.relations.push_back(mono({"beta" + std::to_string(i), "alpha"}));
    e.spec.comment = "relations alpha beta_i = 0 (beta_i then alpha)";
    e.modules["T"] = "S2+P2+P3+P4+P5";
    return e;
}

CorpusEntry euclideanB()
{
    CorpusEntry e{"euclideanB", "hereditary algebra of type D4~", {}, {}, {}, false};
    e.spec.vertices = {"a", "b", "c", "d", "e"};
    e.spec.arrows = {{"ab", "a", "b"}, {"ca", "c", "a"}, {"da", "d", "a"}, {"ea", "e", "a"}};
    e.spec.comment = "quiver c -> a, d -> a, e -> a, a -> b; no relations";
    return e;
}

CorpusEntry nodeA(int n)
{
    CorpusEntry e{"nodeA", "algebra with a node, n = " + std::to_string(n), {}, {}, {}, false};
    for (int v = 1; v <= n; ++v)
        e.spec.vertices.push_back(std::to_string(v));
    e.spec.arrows.push_back({"gamma", "1", "1"});
    e.spec.arrows.push_back({"beta", "1", "4"});
    for (int i = 2; i < n; ++i)
        e.spec.arrows.push_back({"alpha" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
    e.spec.relations = {mono({"gamma", "gamma"}), mono({"gamma", "beta"})};
    e.spec.comment = "relations gamma^2 and beta gamma (gamma then beta)";
    e.notes.push_back("S(1) is the unique node");
    return e;
}

CorpusEntry nodeB(int n)
{
    CorpusEntry e{"nodeB", "hereditary algebra stably equivalent to nodeA, n = " + std::to_string(n), {}, {}, {}, false};
    e.spec.vertices.push_back("1'");
    for (int v = 1; v <= n; ++v)
        e.spec.vertices.push_back(std::to_string(v));
    e.spec.arrows.push_back({"delta", "1", "1'"});
    e.spec.arrows.push_back({"beta", "1", "4"});
    for (int i = 2; i < n; ++i)
        e.spec.arrows.push_back({"alpha" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
    e.spec.comment = "no relations";
    return e;
}

CorpusEntry bm23()
{
    CorpusEntry e{"bm23", "radical cube zero algebra on a 4-cycle with 16 arrows", {}, {}, {}, true};
    e.spec.vertices = {"1", "2", "3", "4"};
    const std::vector<std::string> kinds = {"alpha", "alphabar", "beta", "betabar"};
    auto name = [](const std::string& k, int i) { return k + std::to_string(i); };
    auto next = [](int i) { return i % 4 + 1; };
    for (int i = 1; i <= 4; ++i)
        for (const auto& k : kinds)
            e.spec.arrows.push_back({name(k, i), std::to_string(i), std::to_string(next(i))});
    for (int i = 1; i <= 4; ++i) {
        const int j = next(i);
        e.spec.relations.push_back(binomial({name("alpha", i), name("alpha", j)}, {name("alphabar", i), name("alphabar", j)}));
        e.spec.relations.push_back(binomial({name("beta", i), name("beta", j)}, {name("betabar", i), name("betabar", j)}));
        e.spec.relations.push_back(mono({name("alpha", i), name("alphabar", j)}));
        e.spec.relations.push_back(mono({name("alphabar", i), name("alpha", j)}));
        e.spec.relations.push_back(mono({name("beta", i), name("betabar", j)}));
        e.spec.relations.push_back(mono({name("betabar", i), name("beta", j)}));
    }
    for (int i = 1; i <= 4; ++i)
        for (const auto& a : kinds)
            for (const auto& b : kinds)
                for (const auto& c : kinds)
                    e.spec.relations.push_back(mono({name(a, i), name(b, next(i)), name(c, next(next(i)))}));
    e.spec.comment = "relations read left to right; all paths of length 3 vanish";
    e.notes.push_back("Omega^infinity(A-mod) = proj A is an external claim; it is not computed");
    return e;
}

CorpusEntry xiA(int n)
{
    CorpusEntry e{"xiA", "syzygy-finite algebra, epsilon^" + std::to_string(n) + " = 0", {}, {}, {}, false};
    e.spec.vertices = {"1", "2", "3", "4"};
    e.spec.arrows = {{"gamma", "1", "2"}, {"beta", "2", "1"}, {"delta", "2", "3"}, {"alpha", "3", "2"}, {"epsilon", "3", "3"}, {"eta", "4", "3"}};
    e.spec.relations = {mono({"alpha", "delta", "alpha"}), mono({"gamma", "delta"}), binomial({"delta", "alpha"}, {"beta", "gamma"}),
                        mono(std::vector<std::string>(n, "epsilon")), mono({"delta", "epsilon"}), mono({"epsilon", "alpha"}),
                        mono({"eta", "alpha"})};
    e.spec.comment = "relations alpha delta alpha, delta gamma, alpha delta - gamma beta, epsilon^n, epsilon delta, alpha epsilon, alpha eta, read right to left";
    return e;
}

CorpusEntry xiB(int n)
{
    CorpusEntry e{"xiB", "monomial algebra derived equivalent to xiA, epsilon'^" + std::to_string(n) + " = 0", {}, {}, {}, false};
    e.spec.vertices = {"1'", "2'", "3'", "4'"};
    e.spec.arrows = {{"beta'", "1'", "2'"}, {"gamma'", "2'", "3'"}, {"alpha'", "3'", "1'"}, {"epsilon'", "3'", "3'"}, {"eta'", "4'", "3'"}};
    e.spec.relations = {mono({"alpha'", "beta'", "gamma'", "alpha'"}), mono({"gamma'", "alpha'", "beta'", "gamma'"}),
                        mono(std::vector<std::string>(n, "epsilon'")), mono({"gamma'", "epsilon'"}), mono({"epsilon'", "alpha'"}),
                        mono({"eta'", "alpha'"})};
    e.spec.comment = "relations a'g'b'a', g'b'a'g', e'^n, e'g', a'e', a'eta', read right to left";
    return e;
}

int parse_parameter(const std::string& id, const std::string& text, int lo)
{
    int v = 0;
    if (text.empty() || text.size() > 3 || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw SyzexError(ErrorCode::UnknownCorpusId, "bad parameter in corpus id '" + id + "'");
    v = std::stoi(text);
    if (v < lo)
        throw SyzexError(ErrorCode::UnknownCorpusId, "parameter of '" + id + "' must be at least " + std::to_string(lo));
    return v;
}

} // namespace

std::vector<std::string> corpus_ids()
{
    return {"kron2", "beilinson2", "fivevertex", "euclideanB", "nodeA", "nodeB", "bm23", "xiA", "xiB"};
}

CorpusEntry load_corpus(const std::string& id)
{
    const auto colon = id.find(':');
    const std::string base = id.substr(0, colon);
    const std::string param = colon == std::string::npos ? "" : id.substr(colon + 1);
    const bool has_param = colon != std::string::npos;
    CorpusEntry e;
    if (base == "nodeA" || base == "nodeB") {
        const int n = has_param ? parse_parameter(id, param, 6) : 6;
        e = base == "nodeA" ? nodeA(n) : nodeB(n);
    } else if (base == "xiA" || base == "xiB") {
        const int n = has_param ? parse_parameter(id, param, 2) : 2;
        e = base == "xiA" ? xiA(n) : xiB(n);
    } else if (!has_param && base == "kron2") {
        e = kron2();
    } else if (!has_param && base == "beilinson2") {
        e = beilinson2();
    } else if (!has_param && base == "fivevertex") {
        e = fivevertex();
    } else if (!has_param && base == "euclideanB") {
        e = euclideanB();
    } else if (!has_param && base == "bm23") {
        e = bm23();
    } else {
        throw SyzexError(ErrorCode::UnknownCorpusId, "unknown corpus id '" + id + "'");
    }
    e.id = id;
    return e;
}

bool is_corpus_id(const std::string& id)
{
    try {
        load_corpus(id);
        return true;
    } catch (const SyzexError&) {
        return false;
    }
}

Representation parse_module_expression(const AlgebraPtr& a, const std::string& expr, const std::map<std::string, std::string>& named)
{
    std::vector<Representation> parts;
    std::size_t start = 0;
    while (start <= expr.size()) {
        std::size_t end = expr.find('+', start);
        if (end == std::string::npos)
            end = expr.size();
        std::string term = expr.substr(start, end - start);
        term.erase(0, term.find_first_not_of(" \t"));
        term.erase(term.find_last_not_of(" \t") + 1);
        int times = 1;
        if (auto caret = term.rfind('^'); caret != std::string::npos) {
            const auto k = term.substr(caret + 1);
            if (k.empty() || !std::all_of(k.begin(), k.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw SyzexError(ErrorCode::InvalidModule, "bad exponent in module term '" + term + "'");
            times = std::stoi(k);
            term = term.substr(0, caret);
        }
        if (term.empty())
            throw SyzexError(ErrorCode::InvalidModule, "empty term in module expression '" + expr + "'");
        Representation m;
        if (auto it = named.find(term); it != named.end()) {
            m = parse_module_expression(a, it->second, {});
        } else if (term == "A") {
            m = regular_module(a);
        } else if (term == "0") {
            m = zero_module(a);
        } else {
            const char kind = term[0];
            auto v = a->quiver().vertex_index(term.substr(1));
            if (!v || (kind != 'S' && kind != 'P' && kind != 'I'))
                throw SyzexError(ErrorCode::InvalidModule, "unknown module term '" + term + "'");
            m = kind == 'S' ? simple(a, *v) : kind == 'P' ? projective(a, *v) : injective(a, *v);
        }
        for (int i = 0; i < times; ++i)
            parts.push_back(m);
        start = end + 1;
    }
    return direct_sum(a, parts);
}

} // namespace syzex
