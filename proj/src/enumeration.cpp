#include "subdual/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "subdual/errors.hpp"

namespace subdual {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t pow_checked(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (~std::uint64_t{0}) / base) return ~std::uint64_t{0};
        r *= base;
    }
    return r;
}

std::uint64_t pow2_checked(int bits) { return bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << bits; }

void require_points(int n, const char* what)
{
    if (n < 0 || n > kMaxDim) throw SizeError(std::string(what) + ": point count must lie in [0, 64]");
}

void require_atoms(int n, const char* what)
{
    if (n < 0 || n > kMaxAtoms) throw SizeError(std::string(what) + ": atom count must lie in [0, 6]");
}

void require_search(int bits, const char* what)
{
    if (bits > 20)
        throw SizeError(std::string(what) + ": search space 2^" + std::to_string(bits) + " exceeds the 2^20 cap");
}

bool table_less(const DeVriesMorphism& a, const DeVriesMorphism& b)
{
    return std::lexicographical_compare(a.table().begin(), a.table().end(), b.table().begin(), b.table().end());
}

Rel canonical_partition(int n, const std::vector<int>& labels)
{
    Rel e(Carrier{n}, Carrier{n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (labels[i] == labels[j]) e.set(i, j);
    return e;
}

}  // namespace

std::uint64_t SplitMix64::next() noexcept
{
    state_ += kGamma;
    return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept
{
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t k) noexcept { return mix(seed + (k + 1) * kGamma); }

std::string to_string(SpaceKind kind)
{
    switch (kind) {
    case SpaceKind::relations: return "relations";
    case SpaceKind::equivalences: return "equivalences";
    case SpaceKind::sub_cores: return "sub-cores";
    case SpaceKind::compatible_subs: return "compatible-subs";
    case SpaceKind::map_subs: return "map-subs";
    case SpaceKind::devries_morphisms: return "devries-morphisms";
    case SpaceKind::split_morphisms: return "split-morphisms";
    }
    return "?";
}

std::optional<SpaceKind> parse_space_kind(const std::string& name)
{
    for (SpaceKind k : {SpaceKind::relations, SpaceKind::equivalences, SpaceKind::sub_cores, SpaceKind::compatible_subs,
                        SpaceKind::map_subs, SpaceKind::devries_morphisms, SpaceKind::split_morphisms}) {
        std::string canonical = to_string(k);
        std::string underscored = canonical;
        std::replace(underscored.begin(), underscored.end(), '-', '_');
        if (name == canonical || name == underscored) return k;
    }
    return std::nullopt;
}

Rel relation_from_code(int n, int m, std::uint64_t code) { return Rel(BitMatrix::from_code(n, m, code)); }

std::uint64_t relation_code(const Rel& r) { return r.matrix().code(); }

std::vector<Rel> all_relations(int n, int m)
{
    require_points(n, "relations");
    require_points(m, "relations");
    require_search(n * m, "relations");
    std::vector<Rel> out;
    const std::uint64_t total = std::uint64_t{1} << (n * m);
    out.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) out.push_back(relation_from_code(n, m, c));
    return out;
}

std::uint64_t bell_number(int n)
{
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

std::vector<Rel> all_equivalences(int n)
{
    if (n < 0 || n > 8) throw SizeError("equivalences: exhaustive enumeration limited to 8 points");
    std::vector<Rel> out;
    // Restricted growth strings: labels[i] <= 1 + max(labels[0..i-1]).
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto& self, int i, int max_label) -> void {
        if (i == n) {
            out.push_back(canonical_partition(n, labels));
            return;
        }
        for (int l = 0; l <= max_label + 1; ++l) {
            labels[i] = l;
            self(self, i + 1, std::max(max_label, l));
        }
    };
    rec(rec, 0, -1);
    std::sort(out.begin(), out.end(), [](const Rel& a, const Rel& b) { return relation_code(a) < relation_code(b); });
    return out;
}

Subordination subordination_from_core_code(int m, int n, std::uint64_t code)
{
    return Subordination::from_core(BoolAlg(m), BoolAlg(n), BitMatrix::from_code(m, n, code));
}

std::vector<Subordination> all_sub_cores(int m, int n)
{
    require_atoms(m, "sub-cores");
    require_atoms(n, "sub-cores");
    require_search(m * n, "sub-cores");
    std::vector<Subordination> out;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (m * n)); ++c) out.push_back(subordination_from_core_code(m, n, c));
    return out;
}

std::vector<Subordination> s5_subordinations(int n)
{
    require_atoms(n, "s5 subordinations");
    require_search(n * n, "s5 subordinations");
    std::vector<Subordination> out;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * n)); ++c) {
        Subordination s = subordination_from_core_code(n, n, c);
        if (check_s5_axioms(s).empty()) out.push_back(std::move(s));
    }
    return out;
}

std::vector<CompatibleRelation> all_split_morphisms(int n1, int n2)
{
    require_points(n1, "split-morphisms");
    require_points(n2, "split-morphisms");
    require_search(n1 * n2, "split-morphisms");
    const auto eq1 = all_equivalences(n1);
    const auto eq2 = all_equivalences(n2);
    const auto rels = all_relations(n1, n2);
    std::vector<CompatibleRelation> out;
    for (const Rel& e1 : eq1) {
        const StoneEObject src(Carrier{n1}, e1);
        for (const Rel& e2 : eq2) {
            const StoneEObject tgt(Carrier{n2}, e2);
            for (const Rel& r : rels) {
                CompatibleRelation m(src, tgt, r);
                if (check_split_morphism(m)) out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::vector<CompatibleSubordination> all_compatible_subs(int m, int n)
{
    require_atoms(m, "compatible-subs");
    require_atoms(n, "compatible-subs");
    require_search(m * n, "compatible-subs");
    const auto s5a = s5_subordinations(m);
    const auto s5b = s5_subordinations(n);
    const auto cores = all_sub_cores(m, n);
    std::vector<CompatibleSubordination> out;
    for (const Subordination& sa : s5a) {
        const SubS5Object src(BoolAlg(m), sa);
        for (const Subordination& sb : s5b) {
            const SubS5Object tgt(BoolAlg(n), sb);
            for (const Subordination& t : cores) {
                CompatibleSubordination cs(src, tgt, t);
                if (check_split_morphism(cs)) out.push_back(std::move(cs));
            }
        }
    }
    return out;
}

std::vector<Subordination> all_map_subs(int m, int n)
{
    require_atoms(m, "map-subs");
    require_atoms(n, "map-subs");
    require_search(m * n, "map-subs");
    const Subordination le_a = Subordination::order(BoolAlg(m));
    const Subordination le_b = Subordination::order(BoolAlg(n));
    std::vector<Subordination> out;
    for (Subordination& s : all_sub_cores(m, n))
        if (is_compatible(s, le_a, le_b) && check_map_conditions(s, le_a, le_b)) out.push_back(std::move(s));
    return out;
}

std::vector<std::vector<int>> all_functions(int domain, int codomain)
{
    std::vector<std::vector<int>> out;
    if (pow_checked(static_cast<std::uint64_t>(codomain), domain) > kExhaustiveCap)
        throw SizeError("function space exceeds the 2^20 cap");
    std::vector<int> table(static_cast<std::size_t>(domain), 0);
    if (domain > 0 && codomain == 0) return out;
    for (;;) {
        out.push_back(table);
        int i = domain - 1;
        while (i >= 0 && table[i] == codomain - 1) table[i--] = 0;
        if (i < 0) break;
        ++table[i];
    }
    return out;
}

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<DeVriesMorphism> all_devries_morphisms(int m, int n)
{
    require_atoms(m, "devries-morphisms");
    require_atoms(n, "devries-morphisms");
    const DeVriesAlgebra a = DeVriesAlgebra::canonical(m);
    const DeVriesAlgebra b = DeVriesAlgebra::canonical(n);
    std::vector<DeVriesMorphism> out;
    for (const auto& h : all_functions(n, m)) out.push_back(dual_of_atom_function(a, b, h));
    std::sort(out.begin(), out.end(), table_less);
    return out;
}

std::vector<Subordination> brute_force_subordinations(int m, int n)
{
    require_atoms(m, "brute-force subordinations");
    require_atoms(n, "brute-force subordinations");
    const int rows = 1 << m;
    const int cols = 1 << n;
    require_search(rows * cols, "brute-force subordinations");
    std::vector<Subordination> out;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (rows * cols)); ++c) {
        Subordination s(BoolAlg(m), BoolAlg(n), BitMatrix::from_code(rows, cols, c));
        if (is_subordination(s)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<DeVriesMorphism> brute_force_devries_morphisms(int m, int n)
{
    require_atoms(m, "brute-force devries morphisms");
    require_atoms(n, "brute-force devries morphisms");
    const DeVriesAlgebra a = DeVriesAlgebra::canonical(m);
    const DeVriesAlgebra b = DeVriesAlgebra::canonical(n);
    std::vector<DeVriesMorphism> out;
    for (const auto& t : all_functions(1 << m, 1 << n)) {
        std::vector<Element> table;
        for (int v : t) table.push_back(Element{static_cast<Word>(v)});
        DeVriesMorphism f(a, b, std::move(table));
        if (check_devries_morphism(f).empty()) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), table_less);
    return out;
}

std::vector<Rel> brute_force_equivalences(int n)
{
    require_search(n * n, "brute-force equivalences");
    std::vector<Rel> out;
    for (const Rel& r : all_relations(n, n))
        if (is_equivalence(r)) out.push_back(r);
    return out;
}

std::uint64_t count(const InstanceSpace& space)
{
    const int a = space.first;
    const int b = space.second;
    switch (space.kind) {
    case SpaceKind::relations:
        require_points(a, "relations");
        require_points(b, "relations");
        return pow2_checked(a * b);
    case SpaceKind::equivalences:
        require_points(a, "equivalences");
        return a <= 25 ? bell_number(a) : ~std::uint64_t{0};
    case SpaceKind::sub_cores:
        require_atoms(a, "sub-cores");
        require_atoms(b, "sub-cores");
        return pow2_checked(a * b);
    case SpaceKind::devries_morphisms:
        require_atoms(a, "devries-morphisms");
        require_atoms(b, "devries-morphisms");
        return pow_checked(static_cast<std::uint64_t>(a), b);
    case SpaceKind::compatible_subs:
        return all_compatible_subs(a, b).size();
    case SpaceKind::map_subs:
        return all_map_subs(a, b).size();
    case SpaceKind::split_morphisms:
        return all_split_morphisms(a, b).size();
    }
    return 0;
}

InstanceStream::InstanceStream(InstanceSpace space) : space_(space)
{
    const bool direct = space_.kind == SpaceKind::relations || space_.kind == SpaceKind::sub_cores ||
                        (space_.kind == SpaceKind::equivalences && space_.random);
    if (direct) {
        if (space_.kind == SpaceKind::sub_cores) {
            require_atoms(space_.first, "sub-cores");
            require_atoms(space_.second, "sub-cores");
        } else {
            require_points(space_.first, "relations");
            require_points(space_.second, "relations");
        }
        if (space_.random) {
            size_ = space_.random->count;
        } else {
            size_ = count(space_);
            if (size_ > kExhaustiveCap)
                throw SizeError(to_string(space_.kind) + ": " + std::to_string(space_.first) + "x" +
                                std::to_string(space_.second) + " exceeds the exhaustive cap of 2^20 instances");
        }
        return;
    }

    switch (space_.kind) {
    case SpaceKind::equivalences:
        for (Rel& e : all_equivalences(space_.first)) materialized_.emplace_back(std::move(e));
        break;
    case SpaceKind::compatible_subs:
        for (auto& m : all_compatible_subs(space_.first, space_.second)) materialized_.emplace_back(std::move(m));
        break;
    case SpaceKind::map_subs:
        for (auto& s : all_map_subs(space_.first, space_.second)) materialized_.emplace_back(std::move(s));
        break;
    case SpaceKind::devries_morphisms:
        for (auto& f : all_devries_morphisms(space_.first, space_.second)) materialized_.emplace_back(std::move(f));
        break;
    case SpaceKind::split_morphisms:
        for (auto& m : all_split_morphisms(space_.first, space_.second)) materialized_.emplace_back(std::move(m));
        break;
    default:
        break;
    }
    if (materialized_.size() > kExhaustiveCap) throw SizeError(to_string(space_.kind) + ": exceeds the exhaustive cap");
    size_ = space_.random ? space_.random->count : materialized_.size();
    if (space_.random && materialized_.empty() && size_ > 0)
        throw SizeError(to_string(space_.kind) + ": cannot sample from an empty space");
}

Instance InstanceStream::at(std::uint64_t index) const
{
    if (index >= size_) throw std::out_of_range("instance index past the end of the stream");
    const int a = space_.first;
    const int b = space_.second;
    if (!space_.random) {
        switch (space_.kind) {
        case SpaceKind::relations: return relation_from_code(a, b, index);
        case SpaceKind::sub_cores: return subordination_from_core_code(a, b, index);
        default: return materialized_[index];
        }
    }

    const std::uint64_t seed = space_.random->seed;
    switch (space_.kind) {
    case SpaceKind::relations: {
        BitMatrix m(a, b);
        for (int r = 0; r < a; ++r) m.set_row(r, SplitMix64::at(seed, index * static_cast<std::uint64_t>(a) + r));
        return Rel(m);
    }
    case SpaceKind::sub_cores: {
        BitMatrix core(a, b);
        for (int r = 0; r < a; ++r) core.set_row(r, SplitMix64::at(seed, index * static_cast<std::uint64_t>(a) + r));
        return Subordination::from_core(BoolAlg(a), BoolAlg(b), core);
    }
    case SpaceKind::equivalences: {
        std::vector<int> labels(static_cast<std::size_t>(a));
        for (int p = 0; p < a; ++p)
            labels[p] = static_cast<int>(SplitMix64::at(seed, index * static_cast<std::uint64_t>(a) + p) % static_cast<std::uint64_t>(a));
        return canonical_partition(a, labels);
    }
    default:
        return materialized_[SplitMix64::at(seed, index) % materialized_.size()];
    }
}

std::vector<Instance> enumerate(const InstanceSpace& space)
{
    const InstanceStream stream(space);
    std::vector<Instance> out;
    out.reserve(stream.size());
    for (std::uint64_t i = 0; i < stream.size(); ++i) out.push_back(stream.at(i));
    return out;
}

}  // namespace subdual
