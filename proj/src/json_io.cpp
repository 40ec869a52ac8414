#include "subdual/json_io.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <json.hpp>

#include "subdual/errors.hpp"

namespace subdual {

using Json = nlohmann::json;

namespace {

// ---- reading ----

std::string line_col(std::string_view text, std::size_t byte)
{
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError("field '" + path + "': " + what);
}

const Json& field(const Json& obj, const std::string& name)
{
    auto it = obj.find(name);
    if (it == obj.end()) fail(name, "missing");
    return *it;
}

int read_int(const Json& j, const std::string& path, int lo, int hi)
{
    if (!j.is_number_integer()) fail(path, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < lo || v > hi) fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::pair<int, int> read_size_pair(const Json& obj, const std::string& name, int hi)
{
    const Json& j = field(obj, name);
    if (!j.is_array() || j.size() != 2) fail(name, "expected [first, second]");
    return {read_int(j[0], name + "[0]", 0, hi), read_int(j[1], name + "[1]", 0, hi)};
}

int read_size(const Json& obj, const std::string& name, int hi) { return read_int(field(obj, name), name, 0, hi); }

std::vector<std::pair<int, int>> read_pairs(const Json& obj, const std::string& name, int rows, int cols)
{
    const Json& j = field(obj, name);
    if (!j.is_array()) fail(name, "expected an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string path = name + "[" + std::to_string(k) + "]";
        if (!j[k].is_array() || j[k].size() != 2) fail(path, "expected [i, j]");
        out.emplace_back(read_int(j[k][0], path + "[0]", 0, rows - 1), read_int(j[k][1], path + "[1]", 0, cols - 1));
    }
    return out;
}

std::vector<int> read_table(const Json& obj, const std::string& name, std::size_t length, int hi)
{
    const Json& j = field(obj, name);
    if (!j.is_array()) fail(name, "expected an array");
    if (j.size() != length)
        fail(name, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
    std::vector<int> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_int(j[k], name + "[" + std::to_string(k) + "]", 0, hi));
    return out;
}

Rel rel_from(int n, int m, const std::vector<std::pair<int, int>>& pairs) { return Rel::from_pairs(Carrier{n}, Carrier{m}, pairs); }

Subordination sub_from(int m, int n, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<std::pair<Word, Word>> wp;
    for (auto [a, b] : pairs) wp.emplace_back(Word(a), Word(b));
    return Subordination::from_pairs(BoolAlg(m), BoolAlg(n), wp);
}

std::vector<Element> elements_from(const std::vector<int>& t)
{
    std::vector<Element> out;
    for (int v : t) out.push_back(Element{static_cast<Word>(v)});
    return out;
}

// ---- writing ----

Json pairs_json(const std::vector<std::pair<int, int>>& pairs)
{
    Json out = Json::array();
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

Json pairs_json(const std::vector<std::pair<Word, Word>>& pairs)
{
    Json out = Json::array();
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

Json table_json(const std::vector<Element>& t)
{
    Json out = Json::array();
    for (Element e : t) out.push_back(e.bits);
    return out;
}

// ---- checks ----

std::vector<std::string> equivalence_violations(const Rel& e)
{
    std::vector<std::string> out;
    const int n = e.source().size;
    for (int i = 0; i < n; ++i)
        if (!e.related(i, i)) {
            out.push_back("reflexivity violated at (" + std::to_string(i) + ")");
            break;
        }
    [&] {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (e.related(i, j) && !e.related(j, i)) {
                    out.push_back("symmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    return;
                }
    }();
    [&] {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (e.related(i, j) && e.related(j, k) && !e.related(i, k)) {
                        out.push_back("transitivity violated at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
                        return;
                    }
    }();
    return out;
}

void append(std::vector<std::string>& out, const std::vector<Violation>& vs)
{
    for (const auto& v : vs) out.push_back(v.to_string());
}

template <class C>
std::vector<std::string> absorption_violations(const SplitMorphism<C>& m)
{
    std::vector<std::string> out;
    const auto& f = m.morphism();
    if (!(C::compose(m.source().equivalence(), f) == f)) out.push_back("absorption violated: source equivalence then f differs from f");
    if (!(C::compose(f, m.target().equivalence()) == f)) out.push_back("absorption violated: f then target equivalence differs from f");
    return out;
}

std::vector<std::string> quotient_violations(const QuotientData& q)
{
    std::vector<std::string> out;
    std::vector<int> seen(static_cast<std::size_t>(q.base.size), 0);
    int prev_least = -1;
    for (std::size_t k = 0; k < q.classes.size(); ++k) {
        const auto& c = q.classes[k];
        const std::string at = "classes[" + std::to_string(k) + "]";
        if (c.empty()) {
            out.push_back(at + " is empty");
            continue;
        }
        if (!std::is_sorted(c.begin(), c.end())) out.push_back(at + " is not sorted");
        const int least = *std::min_element(c.begin(), c.end());
        if (least <= prev_least) out.push_back(at + " is out of order (classes go by least member)");
        prev_least = least;
        for (int p : c) ++seen[p];
    }
    for (int p = 0; p < q.base.size; ++p) {
        if (seen[p] == 0) out.push_back("point " + std::to_string(p) + " lies in no class");
        if (seen[p] > 1) out.push_back("point " + std::to_string(p) + " lies in several classes");
    }
    return out;
}

void require_valid(const Document& doc)
{
    const auto v = check_document(doc);
    if (!v.empty()) throw ValidationError(doc.kind + " is invalid: " + v.front());
}

const DeVriesMorphism& as_morphism(const Document& d) { return std::get<DeVriesMorphism>(d.value); }
const Subordination& as_sub(const Document& d) { return std::get<Subordination>(d.value); }
const Rel& as_rel(const Document& d) { return std::get<Rel>(d.value); }

AtomFunction atom_function_of(const DeVriesMorphism& f)
{
    // f(a) = join of atoms y with h(y) <= a, so y <= f({x}) exactly when h(y) = x.
    AtomFunction h{f.target().algebra().atom_count(), f.source().algebra().atom_count(), {}};
    for (int y = 0; y < h.domain; ++y) {
        int found = -1;
        for (int x = 0; x < h.codomain; ++x)
            if ((f(Element{Word{1} << x}).bits >> y) & 1U) {
                if (found >= 0) throw ValidationError("atom " + std::to_string(y) + " lies below the images of several atoms");
                found = x;
            }
        if (found < 0) throw ValidationError("atom " + std::to_string(y) + " lies below no atom image");
        h.table.push_back(found);
    }
    return h;
}

DeVriesMorphism morphism_of(const AtomFunction& h)
{
    return dual_of_atom_function(DeVriesAlgebra::canonical(h.codomain), DeVriesAlgebra::canonical(h.domain), h.table);
}

}  // namespace

const std::vector<std::string>& document_kinds()
{
    static const std::vector<std::string> kinds{
        "relation",        "equivalence",  "atom-relation", "subordination",       "s5-subordination",
        "map-subordination", "devries-algebra", "qsh",       "devries-function",    "atom-function",
        "quotient",        "compatible-relation", "compatible-subordination"};
    return kinds;
}

Document parse_document(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
    }
    if (!root.is_object()) throw ParseError("top level must be an object");
    const Json& kind_j = field(root, "kind");
    if (!kind_j.is_string()) fail("kind", "expected a string");
    const std::string kind = kind_j.get<std::string>();

    if (kind == "relation") {
        auto [n, m] = read_size_pair(root, "points", kMaxDim);
        return {kind, rel_from(n, m, read_pairs(root, "pairs", n, m))};
    }
    if (kind == "equivalence") {
        const int n = read_size(root, "points", kMaxDim);
        return {kind, rel_from(n, n, read_pairs(root, "pairs", n, n))};
    }
    if (kind == "atom-relation") {
        auto [m, n] = read_size_pair(root, "atoms", kMaxAtoms);
        return {kind, rel_from(m, n, read_pairs(root, "pairs", m, n))};
    }
    if (kind == "subordination" || kind == "map-subordination") {
        auto [m, n] = read_size_pair(root, "atoms", kMaxAtoms);
        return {kind, sub_from(m, n, read_pairs(root, "pairs", 1 << m, 1 << n))};
    }
    if (kind == "s5-subordination" || kind == "devries-algebra") {
        const int n = read_size(root, "atoms", kMaxAtoms);
        return {kind, sub_from(n, n, read_pairs(root, "pairs", 1 << n, 1 << n))};
    }
    if (kind == "qsh") {
        auto [m, n] = read_size_pair(root, "atoms", kMaxAtoms);
        const auto t = read_table(root, "table", std::size_t{1} << m, (1 << n) - 1);
        Qsh q{BoolAlg(m), BoolAlg(n), {}};
        for (int g : t) q.table.push_back(IdealRep{Element{static_cast<Word>(g)}});
        return {kind, q};
    }
    if (kind == "devries-function") {
        auto [m, n] = read_size_pair(root, "atoms", kMaxAtoms);
        const auto t = read_table(root, "table", std::size_t{1} << m, (1 << n) - 1);
        return {kind, DeVriesMorphism(DeVriesAlgebra::canonical(m), DeVriesAlgebra::canonical(n), elements_from(t))};
    }
    if (kind == "atom-function") {
        auto [d, c] = read_size_pair(root, "atoms", kMaxAtoms);
        if (d > 0 && c == 0) fail("atoms", "no function from a nonempty set of atoms into an empty one");
        return {kind, AtomFunction{d, c, read_table(root, "table", static_cast<std::size_t>(d), std::max(c - 1, 0))}};
    }
    if (kind == "quotient") {
        const Json& space = field(root, "space");
        if (!space.is_object()) fail("space", "expected an object");
        const int n = read_int(field(space, "points"), "space.points", 0, kMaxDim);
        const Json& cj = field(root, "classes");
        if (!cj.is_array()) fail("classes", "expected an array of point lists");
        QuotientData q{Carrier{n}, Rel(Carrier{n}, Carrier{n}), {}, Rel()};
        for (std::size_t k = 0; k < cj.size(); ++k) {
            const std::string path = "classes[" + std::to_string(k) + "]";
            if (!cj[k].is_array()) fail(path, "expected an array of points");
            std::vector<int> c;
            for (std::size_t i = 0; i < cj[k].size(); ++i)
                c.push_back(read_int(cj[k][i], path + "[" + std::to_string(i) + "]", 0, n - 1));
            for (int a : c)
                for (int b : c) q.equiv.set(a, b);
            q.classes.push_back(std::move(c));
        }
        if (quotient_violations(q).empty()) {
            std::vector<int> class_of(static_cast<std::size_t>(n));
            for (std::size_t k = 0; k < q.classes.size(); ++k)
                for (int p : q.classes[k]) class_of[p] = static_cast<int>(k);
            q.projection = Rel::graph(q.base, q.quotient_carrier(), class_of);
        }
        return {kind, q};
    }
    if (kind == "compatible-relation") {
        auto [n1, n2] = read_size_pair(root, "points", kMaxDim);
        const StoneEObject src(Carrier{n1}, rel_from(n1, n1, read_pairs(root, "source", n1, n1)));
        const StoneEObject tgt(Carrier{n2}, rel_from(n2, n2, read_pairs(root, "target", n2, n2)));
        return {kind, CompatibleRelation(src, tgt, rel_from(n1, n2, read_pairs(root, "pairs", n1, n2)))};
    }
    if (kind == "compatible-subordination") {
        auto [m, n] = read_size_pair(root, "atoms", kMaxAtoms);
        const SubS5Object src(BoolAlg(m), sub_from(m, m, read_pairs(root, "source", 1 << m, 1 << m)));
        const SubS5Object tgt(BoolAlg(n), sub_from(n, n, read_pairs(root, "target", 1 << n, 1 << n)));
        return {kind, CompatibleSubordination(src, tgt, sub_from(m, n, read_pairs(root, "pairs", 1 << m, 1 << n)))};
    }
    fail("kind", "unknown kind '" + kind + "'");
}

std::string emit(const Document& doc)
{
    Json j;
    j["kind"] = doc.kind;
    const std::string& k = doc.kind;
    if (k == "relation") {
        const Rel& r = as_rel(doc);
        j["points"] = {r.source().size, r.target().size};
        j["pairs"] = pairs_json(r.pairs());
    } else if (k == "equivalence") {
        const Rel& r = as_rel(doc);
        j["points"] = r.source().size;
        j["pairs"] = pairs_json(r.pairs());
    } else if (k == "atom-relation") {
        const Rel& r = as_rel(doc);
        j["atoms"] = {r.source().size, r.target().size};
        j["pairs"] = pairs_json(r.pairs());
    } else if (k == "subordination" || k == "map-subordination") {
        const Subordination& s = as_sub(doc);
        j["atoms"] = {s.source().atom_count(), s.target().atom_count()};
        j["pairs"] = pairs_json(s.pairs());
    } else if (k == "s5-subordination" || k == "devries-algebra") {
        const Subordination& s = as_sub(doc);
        j["atoms"] = s.source().atom_count();
        j["pairs"] = pairs_json(s.pairs());
    } else if (k == "qsh") {
        const Qsh& q = std::get<Qsh>(doc.value);
        j["atoms"] = {q.source.atom_count(), q.target.atom_count()};
        Json t = Json::array();
        for (const IdealRep& i : q.table) t.push_back(i.generator.bits);
        j["table"] = t;
    } else if (k == "devries-function") {
        const DeVriesMorphism& f = as_morphism(doc);
        j["atoms"] = {f.source().algebra().atom_count(), f.target().algebra().atom_count()};
        j["table"] = table_json(f.table());
    } else if (k == "atom-function") {
        const AtomFunction& h = std::get<AtomFunction>(doc.value);
        j["atoms"] = {h.domain, h.codomain};
        j["table"] = h.table;
    } else if (k == "quotient") {
        const QuotientData& q = std::get<QuotientData>(doc.value);
        j["space"] = {{"points", q.base.size}};
        j["classes"] = q.classes;
    } else if (k == "compatible-relation") {
        const CompatibleRelation& m = std::get<CompatibleRelation>(doc.value);
        j["points"] = {m.source().base().size, m.target().base().size};
        j["source"] = pairs_json(m.source().equivalence().pairs());
        j["target"] = pairs_json(m.target().equivalence().pairs());
        j["pairs"] = pairs_json(m.morphism().pairs());
    } else if (k == "compatible-subordination") {
        const CompatibleSubordination& m = std::get<CompatibleSubordination>(doc.value);
        j["atoms"] = {m.source().base().atom_count(), m.target().base().atom_count()};
        j["source"] = pairs_json(m.source().equivalence().pairs());
        j["target"] = pairs_json(m.target().equivalence().pairs());
        j["pairs"] = pairs_json(m.morphism().pairs());
    } else {
        throw std::invalid_argument("emit: unknown kind '" + k + "'");
    }
    return j.dump();
}

std::vector<std::string> check_document(const Document& doc)
{
    std::vector<std::string> out;
    const std::string& k = doc.kind;
    if (k == "relation" || k == "atom-relation" || k == "atom-function") return out;
    if (k == "equivalence") return equivalence_violations(as_rel(doc));
    if (k == "subordination") {
        append(out, check_subordination(as_sub(doc)));
    } else if (k == "s5-subordination") {
        append(out, check_subordination(as_sub(doc)));
        append(out, check_s5_axioms(as_sub(doc)));
    } else if (k == "devries-algebra") {
        const Subordination& s = as_sub(doc);
        append(out, check_devries_algebra(s.source(), s));
    } else if (k == "qsh") {
        append(out, check_qsh(std::get<Qsh>(doc.value)));
    } else if (k == "devries-function") {
        append(out, check_devries_morphism(as_morphism(doc)));
    } else if (k == "map-subordination") {
        const Subordination& s = as_sub(doc);
        const Subordination le_a = Subordination::order(s.source());
        const Subordination le_b = Subordination::order(s.target());
        append(out, check_subordination(s));
        if (!is_compatible(s, le_a, le_b)) out.push_back("compatibility violated");
        append(out, map_condition_violations(s, le_a, le_b));
    } else if (k == "quotient") {
        return quotient_violations(std::get<QuotientData>(doc.value));
    } else if (k == "compatible-relation") {
        return absorption_violations(std::get<CompatibleRelation>(doc.value));
    } else if (k == "compatible-subordination") {
        const auto& m = std::get<CompatibleSubordination>(doc.value);
        append(out, check_subordination(m.morphism()));
        for (auto& s : absorption_violations(m)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> conversion_targets(const std::string& kind)
{
    static const std::map<std::string, std::vector<std::string>> targets{
        {"relation", {"subordination"}},
        {"subordination", {"qsh", "atom-relation"}},
        {"qsh", {"subordination", "atom-relation"}},
        {"atom-relation", {"subordination", "qsh"}},
        {"devries-function", {"map-subordination", "atom-function"}},
        {"map-subordination", {"devries-function", "atom-function"}},
        {"atom-function", {"devries-function", "map-subordination"}},
        {"equivalence", {"s5-subordination", "quotient"}},
        {"s5-subordination", {"equivalence"}},
        {"quotient", {"equivalence"}},
    };
    auto it = targets.find(kind);
    return it == targets.end() ? std::vector<std::string>{} : it->second;
}

Document convert(const Document& doc, const std::string& to)
{
    const auto allowed = conversion_targets(doc.kind);
    if (std::find(allowed.begin(), allowed.end(), to) == allowed.end())
        throw std::invalid_argument("no conversion from " + doc.kind + " to " + to);
    const std::string& k = doc.kind;

    // The map conditions are checked by the conversion itself so the error names the failed clause.
    if (k == "map-subordination") {
        const Subordination& s = as_sub(doc);
        const DeVriesMorphism f = subordination_to_morphism(s, DeVriesAlgebra::canonical(s.source().atom_count()),
                                                            DeVriesAlgebra::canonical(s.target().atom_count()));
        if (to == "devries-function") return {to, f};
        return {to, atom_function_of(f)};
    }
    require_valid(doc);

    if (k == "relation") return {to, clop_functor(as_rel(doc))};
    if (k == "subordination") {
        if (to == "qsh") return {to, to_qsh(as_sub(doc))};
        return {to, ult_functor(as_sub(doc))};
    }
    if (k == "qsh") {
        Subordination s = from_qsh(std::get<Qsh>(doc.value));
        if (to == "subordination") return {to, std::move(s)};
        return {to, ult_functor(s)};
    }
    if (k == "atom-relation") {
        const Rel& r = as_rel(doc);
        Subordination s = clop_functor(r);
        if (to == "subordination") return {to, std::move(s)};
        return {to, to_qsh(s)};
    }
    if (k == "devries-function") {
        const DeVriesMorphism& f = as_morphism(doc);
        if (to == "map-subordination") return {to, morphism_to_subordination(f)};
        return {to, atom_function_of(f)};
    }
    if (k == "atom-function") {
        DeVriesMorphism f = morphism_of(std::get<AtomFunction>(doc.value));
        if (to == "devries-function") return {to, std::move(f)};
        return {to, morphism_to_subordination(f)};
    }
    if (k == "equivalence") {
        const Rel& e = as_rel(doc);
        if (to == "quotient") return {to, quotient(e.source(), e)};
        if (e.source().size > kMaxAtoms)
            throw SizeError("equivalence on more than 6 points has no subordination form here");
        return {to, clop_functor(e)};
    }
    if (k == "s5-subordination") return {to, ult_functor(as_sub(doc))};
    if (k == "quotient") return {to, std::get<QuotientData>(doc.value).equiv};
    throw std::invalid_argument("no conversion from " + k + " to " + to);
}

Document instance_document(SpaceKind kind, const Instance& instance)
{
    switch (kind) {
    case SpaceKind::relations: return {"relation", std::get<Rel>(instance)};
    case SpaceKind::equivalences: return {"equivalence", std::get<Rel>(instance)};
    case SpaceKind::sub_cores: return {"subordination", std::get<Subordination>(instance)};
    case SpaceKind::map_subs: return {"map-subordination", std::get<Subordination>(instance)};
    case SpaceKind::compatible_subs: return {"compatible-subordination", std::get<CompatibleSubordination>(instance)};
    case SpaceKind::devries_morphisms: return {"devries-function", std::get<DeVriesMorphism>(instance)};
    case SpaceKind::split_morphisms: return {"compatible-relation", std::get<CompatibleRelation>(instance)};
    }
    throw std::invalid_argument("instance_document: unknown space");
}

}  // namespace subdual
