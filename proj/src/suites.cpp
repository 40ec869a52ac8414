#include <algorithm>
#include <memory>
#include <numeric>
#include <set>

#include "subdual/devries.hpp"
#include "subdual/enumeration.hpp"
#include "subdual/errors.hpp"
#include "subdual/json_io.hpp"
#include "subdual/split_allegory.hpp"
#include "subdual/stone.hpp"
#include "subdual/verify.hpp"

namespace subdual {

namespace {

using Outcome = std::optional<std::string>;
using Check = std::function<Outcome(std::uint64_t)>;
using Codes = std::vector<std::uint64_t>;

struct Block {
    std::uint64_t count = 0;
    Check check;
};

// FNV-1a, for deriving per-block seeds from names.
std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Sampling {
    std::optional<std::uint64_t> random;
    std::uint64_t seed = 0;

    Sampling derive(const std::string& label) const { return {random, SplitMix64::at(seed, fnv1a(label))}; }
};

Law concat(std::string name, std::vector<Block> blocks)
{
    auto shared = std::make_shared<std::vector<Block>>(std::move(blocks));
    auto starts = std::make_shared<std::vector<std::uint64_t>>();
    std::uint64_t total = 0;
    for (const Block& b : *shared) {
        starts->push_back(total);
        total += b.count;
    }
    return Law{std::move(name), total, [shared, starts](std::uint64_t i) -> Outcome {
                   const auto k = static_cast<std::size_t>(std::upper_bound(starts->begin(), starts->end(), i) - starts->begin() - 1);
                   return (*shared)[k].check(i - (*starts)[k]);
               }};
}

void require_cap(std::uint64_t count, const std::string& what)
{
    if (count > kExhaustiveCap)
        throw SizeError(what + ": exhaustive space of " + std::to_string(count) +
                        " instances exceeds the 2^20 cap; pass --random K to sample");
}

Block code_block(const std::string& what, std::vector<int> widths, const Sampling& s, std::function<Outcome(const Codes&)> f)
{
    const int total_bits = std::accumulate(widths.begin(), widths.end(), 0);
    if (s.random) {
        const Sampling own = s.derive(what);
        return {*s.random, [widths, own, f](std::uint64_t i) {
                    Codes c;
                    for (std::size_t j = 0; j < widths.size(); ++j)
                        c.push_back(SplitMix64::at(own.seed, i * widths.size() + j) & low_mask(widths[j]));
                    return f(c);
                }};
    }
    if (total_bits > 20)
        throw SizeError(what + ": exhaustive space of 2^" + std::to_string(total_bits) +
                        " instances exceeds the 2^20 cap; pass --random K to sample");
    return {std::uint64_t{1} << total_bits, [widths, f](std::uint64_t i) {
                Codes c;
                for (int w : widths) {
                    c.push_back(i & low_mask(w));
                    i >>= w;
                }
                return f(c);
            }};
}

template <class T>
using Shared = std::shared_ptr<const std::vector<T>>;

template <class T>
Shared<T> share(std::vector<T> v)
{
    return std::make_shared<const std::vector<T>>(std::move(v));
}

template <class T, class F>
Block list_block(const std::string& what, Shared<T> items, const Sampling& s, F f)
{
    if (s.random) {
        const Sampling own = s.derive(what);
        return {items->empty() ? 0 : *s.random,
                [items, own, f](std::uint64_t i) { return f((*items)[SplitMix64::at(own.seed, i) % items->size()]); }};
    }
    require_cap(items->size(), what);
    return {items->size(), [items, f](std::uint64_t i) { return f((*items)[i]); }};
}

template <class A, class B, class F>
Block pair_block(const std::string& what, Shared<A> as, Shared<B> bs, const Sampling& s, F f)
{
    const std::uint64_t total = static_cast<std::uint64_t>(as->size()) * bs->size();
    auto at = [as, bs, f](std::uint64_t k) { return f((*as)[k / bs->size()], (*bs)[k % bs->size()]); };
    if (s.random) {
        const Sampling own = s.derive(what);
        return {total == 0 ? 0 : *s.random, [at, own, total](std::uint64_t i) { return at(SplitMix64::at(own.seed, i) % total); }};
    }
    require_cap(total, what);
    return {total, at};
}

Block single(std::function<Outcome()> f)
{
    return {1, [f](std::uint64_t) { return f(); }};
}

std::string shape(int a, int b) { return std::to_string(a) + "x" + std::to_string(b); }
std::string shape(int a, int b, int c) { return shape(a, b) + "x" + std::to_string(c); }

std::string rel_s(const Rel& r) { return emit({"relation", r}); }
std::string sub_s(const Subordination& s) { return emit({"subordination", s}); }
std::string fn_s(const DeVriesMorphism& f) { return emit({"devries-function", f}); }

Outcome fail_if(bool bad, const std::function<std::string()>& describe)
{
    if (bad) return describe();
    return std::nullopt;
}

Rel rel_code(int n, int m, std::uint64_t c) { return relation_from_code(n, m, c); }
Subordination sub_code(int m, int n, std::uint64_t c) { return subordination_from_core_code(m, n, c); }

// ---- size flags ----

enum class Unit { atoms, points, either };

int resolve(const std::string& suite, const VerifyOptions& o, Unit unit, std::optional<int> fallback, bool second = false)
{
    if (unit == Unit::atoms && o.points) throw std::invalid_argument("suite " + suite + " takes --atoms, not --points");
    if (unit == Unit::points && o.atoms) throw std::invalid_argument("suite " + suite + " takes --points, not --atoms");
    if (o.atoms && o.points) throw std::invalid_argument("suite " + suite + " takes one of --atoms and --points");
    const auto& given = o.atoms ? o.atoms : o.points;
    if (given) return second ? given->second : given->first;
    if (!fallback) throw std::invalid_argument("suite " + suite + " needs a size");
    return *fallback;
}

bool size_given(const VerifyOptions& o) { return o.atoms.has_value() || o.points.has_value(); }

struct Ctx {
    std::string suite;
    const VerifyOptions& opt;
    Report& report;
    std::vector<Law> laws;
    Sampling sampling;

    void add(std::string name, std::vector<Block> blocks) { laws.push_back(concat(std::move(name), std::move(blocks))); }
    void space(std::string s) { report.spaces.push_back(std::move(s)); }
    Sampling sampled(const std::string& label) const { return sampling.derive(suite + "/" + label); }
};

std::string mode_label(const VerifyOptions& o)
{
    if (o.random) return "random(" + std::to_string(*o.random) + ", seed " + std::to_string(o.seed) + ")";
    return "exhaustive";
}

// ---- duality ----

void duality(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::either, 3);
    const int m_max = resolve(c.suite, c.opt, Unit::either, 3, true);
    const int comp_max = c.opt.random ? std::max(n_max, m_max) : std::min({n_max, m_max, 2});
    c.report.statement = "Clop and Ult are mutually inverse on morphisms, preserve identities and composition, and commute with the dagger";
    c.space("relations and subordination cores up to " + shape(n_max, m_max) + ", " + mode_label(c.opt));

    std::vector<Block> uc, cu, dag, dv;
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= m_max; ++m) {
            const Sampling s = c.sampled(shape(n, m));
            uc.push_back(code_block("ult-after-clop " + shape(n, m), {n * m}, s, [n, m](const Codes& k) {
                const Rel r = rel_code(n, m, k[0]);
                return fail_if(ult_functor(clop_functor(r)) != r, [&] { return rel_s(r); });
            }));
            cu.push_back(code_block("clop-after-ult " + shape(n, m), {n * m}, s, [n, m](const Codes& k) {
                const Subordination t = sub_code(n, m, k[0]);
                return fail_if(clop_functor(ult_functor(t)) != t, [&] { return sub_s(t); });
            }));
            dag.push_back(code_block("dagger " + shape(n, m), {n * m}, s, [n, m](const Codes& k) {
                const Rel r = rel_code(n, m, k[0]);
                return fail_if(clop_functor(converse(r)) != sub_dagger(clop_functor(r)), [&] { return rel_s(r); });
            }));
            dv.push_back(code_block("finite-regular-open " + shape(n, m), {n * m}, s, [n, m](const Codes& k) {
                const Rel r = rel_code(n, m, k[0]);
                return fail_if(devries_functor_finite(r) != clop_functor(r), [&] { return rel_s(r); });
            }));
        }
    c.add("ult-after-clop", std::move(uc));
    c.add("clop-after-ult", std::move(cu));
    c.add("dagger-commutation", std::move(dag));
    c.add("finite-regular-open-is-clop", std::move(dv));

    std::vector<Block> ids;
    for (int n = 0; n <= std::max(n_max, m_max); ++n)
        ids.push_back(single([n]() -> Outcome {
            const Carrier x{n};
            if (clop_functor(Rel::identity(x)) != Subordination::order(BoolAlg(n))) return "clop(id) on " + std::to_string(n) + " points";
            if (ult_functor(Subordination::order(BoolAlg(n))) != Rel::identity(x)) return "ult(<=) on " + std::to_string(n) + " atoms";
            return std::nullopt;
        }));
    c.add("identities", std::move(ids));

    std::vector<Block> cc, uu;
    auto comp_blocks = [&](int x, int y, int z, const Sampling& s) {
        cc.push_back(code_block("clop-composition " + shape(x, y, z), {x * y, y * z}, s, [x, y, z](const Codes& k) {
            const Rel r1 = rel_code(x, y, k[0]);
            const Rel r2 = rel_code(y, z, k[1]);
            return fail_if(clop_functor(compose(r1, r2)) != compose_subordinations(clop_functor(r1), clop_functor(r2)),
                           [&] { return rel_s(r1) + " ; " + rel_s(r2); });
        }));
        uu.push_back(code_block("ult-composition " + shape(x, y, z), {x * y, y * z}, s, [x, y, z](const Codes& k) {
            const Subordination s1 = sub_code(x, y, k[0]);
            const Subordination s2 = sub_code(y, z, k[1]);
            return fail_if(ult_functor(compose_subordinations(s1, s2)) != compose(ult_functor(s1), ult_functor(s2)),
                           [&] { return sub_s(s1) + " ; " + sub_s(s2); });
        }));
    };
    for (int x = 0; x <= comp_max; ++x)
        for (int y = 0; y <= comp_max; ++y)
            for (int z = 0; z <= comp_max; ++z) comp_blocks(x, y, z, c.sampled("comp " + shape(x, y, z)));
    const int top = std::max(n_max, m_max);
    if (!c.opt.random && top > comp_max) {
        comp_blocks(top, top, top, Sampling{1000, c.opt.seed}.derive(c.suite + "/comp-random"));
        c.space("composition exhaustive up to " + shape(comp_max, comp_max, comp_max) + ", random(1000, seed " +
                std::to_string(c.opt.seed) + ") at " + shape(top, top, top));
    }
    c.add("clop-composition", std::move(cc));
    c.add("ult-composition", std::move(uu));
}

// ---- allegory laws ----

template <class C>
struct Maker;

template <>
struct Maker<RelCalculus> {
    static Rel make(int a, int b, std::uint64_t code) { return rel_code(a, b, code); }
    static std::string show(const Rel& r) { return rel_s(r); }
    static int max_size() { return 8; }
};

template <>
struct Maker<SubCalculus> {
    static Subordination make(int a, int b, std::uint64_t code) { return sub_code(a, b, code); }
    static std::string show(const Subordination& s) { return sub_s(s); }
    static int max_size() { return kMaxAtoms; }
};

struct Shapes {
    int exhaustive_max;
    std::optional<int> random_size;
    std::uint64_t random_count;
};

Shapes allegory_shapes(const std::string& suite, const VerifyOptions& o)
{
    if (size_given(o)) return {resolve(suite, o, Unit::either, std::nullopt), std::nullopt, 0};
    return {2, 4, o.random.value_or(10000)};
}

// Blocks for every carrier shape up to the exhaustive size, plus one sampled block at the random size.
template <class F>
std::vector<Block> shaped(Ctx& c, const Shapes& sh, const std::string& label, int arity, F make_block)
{
    std::vector<Block> out;
    std::vector<int> dims(static_cast<std::size_t>(arity), 0);
    auto rec = [&](auto& self, int i) -> void {
        if (i == arity) {
            std::string tag = label;
            for (int d : dims) tag += " " + std::to_string(d);
            out.push_back(make_block(dims, c.sampled(tag), tag));
            return;
        }
        for (int d = 0; d <= sh.exhaustive_max; ++d) {
            dims[i] = d;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (sh.random_size) {
        std::fill(dims.begin(), dims.end(), *sh.random_size);
        const std::string tag = label + " random";
        out.push_back(make_block(dims, Sampling{sh.random_count, c.opt.seed}.derive(c.suite + "/" + tag), tag));
    }
    return out;
}

template <class C>
void modular_laws(Ctx& c, const Shapes& sh, const std::string& prefix)
{
    using M = Maker<C>;
    c.add(prefix + "modular-law", shaped(c, sh, prefix + "modular", 3, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1], z = d[2];
              return code_block(tag, {x * y, y * z, x * z}, s, [x, y, z](const Codes& k) {
                  const auto f = M::make(x, y, k[0]);
                  const auto g = M::make(y, z, k[1]);
                  const auto h = M::make(x, z, k[2]);
                  return fail_if(!allegory_modular_law<C>(f, g, h),
                                 [&] { return M::show(f) + " ; " + M::show(g) + " /\\ " + M::show(h); });
              });
          }));
}

template <class C>
void allegory_laws(Ctx& c, const Shapes& sh, const std::string& prefix)
{
    using M = Maker<C>;
    modular_laws<C>(c, sh, prefix);
    c.add(prefix + "dagger-involution", shaped(c, sh, prefix + "involution", 2, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1];
              return code_block(tag, {x * y}, s, [x, y](const Codes& k) {
                  const auto f = M::make(x, y, k[0]);
                  return fail_if(!(C::dagger(C::dagger(f)) == f), [&] { return M::show(f); });
              });
          }));
    c.add(prefix + "dagger-antidistribution", shaped(c, sh, prefix + "antidistribution", 3, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1], z = d[2];
              return code_block(tag, {x * y, y * z}, s, [x, y, z](const Codes& k) {
                  const auto f = M::make(x, y, k[0]);
                  const auto g = M::make(y, z, k[1]);
                  return fail_if(!(C::dagger(C::compose(f, g)) == C::compose(C::dagger(g), C::dagger(f))),
                                 [&] { return M::show(f) + " ; " + M::show(g); });
              });
          }));
    c.add(prefix + "dagger-monotone", shaped(c, sh, prefix + "dagger-monotone", 2, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1];
              return code_block(tag, {x * y, x * y}, s, [x, y](const Codes& k) {
                  const auto g = M::make(x, y, k[0]);
                  const auto f = C::meet(g, M::make(x, y, k[1]));
                  return fail_if(!C::leq(f, g) || !C::leq(C::dagger(f), C::dagger(g)),
                                 [&] { return M::show(f) + " <= " + M::show(g); });
              });
          }));
    c.add(prefix + "composition-monotone", shaped(c, sh, prefix + "composition-monotone", 3, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1], z = d[2];
              return code_block(tag, {x * y, x * y, y * z}, s, [x, y, z](const Codes& k) {
                  const auto f1 = M::make(x, y, k[0]);
                  const auto f2 = C::meet(f1, M::make(x, y, k[1]));
                  const auto g = M::make(y, z, k[2]);
                  // the meet keeps f2 below f1 in the calculus order
                  return fail_if(!C::leq(f2, f1) || !C::leq(C::compose(f2, g), C::compose(f1, g)) || !C::leq(C::compose(C::dagger(g), C::dagger(f2)), C::compose(C::dagger(g), C::dagger(f1))),
                                 [&] { return M::show(f1) + " ; " + M::show(g); });
              });
          }));
    c.add(prefix + "associativity", shaped(c, sh, prefix + "associativity", 4, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int w = d[0], x = d[1], y = d[2], z = d[3];
              return code_block(tag, {w * x, x * y, y * z}, s, [w, x, y, z](const Codes& k) {
                  const auto f = M::make(w, x, k[0]);
                  const auto g = M::make(x, y, k[1]);
                  const auto h = M::make(y, z, k[2]);
                  return fail_if(!(C::compose(C::compose(f, g), h) == C::compose(f, C::compose(g, h))),
                                 [&] { return M::show(f) + " ; " + M::show(g) + " ; " + M::show(h); });
              });
          }));
    c.add(prefix + "identity-laws", shaped(c, sh, prefix + "identity", 2, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1];
              return code_block(tag, {x * y}, s, [x, y](const Codes& k) {
                  const auto f = M::make(x, y, k[0]);
                  const auto id_x = C::identity(C::source(f));
                  const auto id_y = C::identity(C::target(f));
                  return fail_if(!(C::compose(id_x, f) == f) || !(C::compose(f, id_y) == f), [&] { return M::show(f); });
              });
          }));
}

void allegory_suite(Ctx& c)
{
    const Shapes sh = allegory_shapes(c.suite, c.opt);
    c.report.statement = "relations under inclusion and subordinations under reverse inclusion are allegories, and Clop reverses the order";
    c.space("carrier and atom shapes up to " + std::to_string(sh.exhaustive_max) + " per dimension, " + mode_label(c.opt));
    if (sh.random_size)
        c.space("random(" + std::to_string(sh.random_count) + ", seed " + std::to_string(c.opt.seed) + ") at size " +
                std::to_string(*sh.random_size));
    allegory_laws<RelCalculus>(c, sh, "rel ");
    allegory_laws<SubCalculus>(c, sh, "sub ");

    c.add("order-reversal", shaped(c, sh, "order-reversal", 2, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1];
              return code_block(tag, {x * y, x * y}, s, [x, y](const Codes& k) {
                  const Rel r1 = rel_code(x, y, k[0]);
                  const Rel r2 = rel_code(x, y, k[1]);
                  const bool rel = rel_leq(r1, r2);
                  const bool sub = sub_subset(clop_functor(r2), clop_functor(r1));
                  const bool allegory = SubCalculus::leq(clop_functor(r1), clop_functor(r2));
                  return fail_if(rel != sub || rel != allegory, [&] { return rel_s(r1) + " vs " + rel_s(r2); });
              });
          }));
    c.add("meet-preservation", shaped(c, sh, "meet-preservation", 2, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1];
              return code_block(tag, {x * y, x * y}, s, [x, y](const Codes& k) {
                  const Rel r1 = rel_code(x, y, k[0]);
                  const Rel r2 = rel_code(x, y, k[1]);
                  return fail_if(clop_functor(rel_meet(r1, r2)) != SubCalculus::meet(clop_functor(r1), clop_functor(r2)),
                                 [&] { return rel_s(r1) + " /\\ " + rel_s(r2); });
              });
          }));
    c.add("map-is-function-graph", shaped(c, sh, "map", 2, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1];
              return code_block(tag, {x * y}, s, [x, y](const Codes& k) {
                  const Rel r = rel_code(x, y, k[0]);
                  return fail_if(is_map(r) != is_function_graph(r), [&] { return rel_s(r); });
              });
          }));
}

void modular_suite(Ctx& c)
{
    const Shapes sh = allegory_shapes(c.suite, c.opt);
    c.report.statement = "the modular law holds for relations and for subordinations";
    c.space("triples over shapes up to " + std::to_string(sh.exhaustive_max) + " per dimension, " + mode_label(c.opt));
    if (sh.random_size)
        c.space("random(" + std::to_string(sh.random_count) + ", seed " + std::to_string(c.opt.seed) + ") at size " +
                std::to_string(*sh.random_size));
    modular_laws<RelCalculus>(c, sh, "rel ");
    modular_laws<SubCalculus>(c, sh, "sub ");
    c.add("rel modular-law (direct)", shaped(c, sh, "direct", 3, [](const std::vector<int>& d, const Sampling& s, const std::string& tag) {
              const int x = d[0], y = d[1], z = d[2];
              return code_block(tag, {x * y, y * z, x * z}, s, [x, y, z](const Codes& k) {
                  const Rel r = rel_code(x, y, k[0]);
                  const Rel t = rel_code(y, z, k[1]);
                  const Rel u = rel_code(x, z, k[2]);
                  return fail_if(!check_modular_law(r, t, u), [&] { return rel_s(r) + " ; " + rel_s(t) + " /\\ " + rel_s(u); });
              });
          }));
}

// ---- QSH ----

void qsh_suite(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::atoms, 2);
    const int m_max = resolve(c.suite, c.opt, Unit::atoms, 2, true);
    const int top = std::max(n_max, m_max);
    c.report.statement = "subordinations and quasi-semi-homomorphisms correspond bijectively, with composition reversed";
    c.space("subordination cores up to " + shape(n_max, m_max) + " atoms, " + mode_label(c.opt));
    c.space("qsh tables up to " + shape(n_max, m_max) + " atoms, filtered by the qsh axioms");

    std::vector<Block> valid, from_to, to_from, counts, unit;
    for (int m = 0; m <= n_max; ++m)
        for (int n = 0; n <= m_max; ++n) {
            const Sampling s = c.sampled(shape(m, n));
            valid.push_back(code_block("qsh-valid " + shape(m, n), {m * n}, s, [m, n](const Codes& k) -> Outcome {
                const Subordination t = sub_code(m, n, k[0]);
                const auto v = check_qsh(to_qsh(t));
                if (!v.empty()) return sub_s(t) + ": " + v.front().to_string();
                return std::nullopt;
            }));
            from_to.push_back(code_block("from-after-to " + shape(m, n), {m * n}, s, [m, n](const Codes& k) {
                const Subordination t = sub_code(m, n, k[0]);
                return fail_if(from_qsh(to_qsh(t)) != t, [&] { return sub_s(t); });
            }));
            unit.push_back(code_block("qsh-unit " + shape(m, n), {m * n}, s, [m, n](const Codes& k) {
                const Subordination t = sub_code(m, n, k[0]);
                const Qsh d = to_qsh(t);
                return fail_if(compose_qsh(qsh_identity(d.source), d) != d || compose_qsh(d, qsh_identity(d.target)) != d,
                               [&] { return sub_s(t); });
            }));
            // Every table A -> ideals(B): 2^m entries of n bits each.
            const int width = n * (1 << m);
            to_from.push_back(code_block("to-after-from " + shape(m, n), {width}, s, [m, n](const Codes& k) -> Outcome {
                Qsh d{BoolAlg(m), BoolAlg(n), {}};
                for (int a = 0; a < (1 << m); ++a) d.table.push_back(IdealRep{Element{(k[0] >> (a * n)) & low_mask(n)}});
                if (!check_qsh(d).empty()) return std::nullopt;
                return fail_if(to_qsh(from_qsh(d)) != d, [&] { return emit({"qsh", d}); });
            }));
            if (!c.opt.random && width <= 20)
                counts.push_back(single([m, n, width]() -> Outcome {
                    std::uint64_t valid_tables = 0;
                    for (std::uint64_t code = 0; code < (std::uint64_t{1} << width); ++code) {
                        Qsh d{BoolAlg(m), BoolAlg(n), {}};
                        for (int a = 0; a < (1 << m); ++a) d.table.push_back(IdealRep{Element{(code >> (a * n)) & low_mask(n)}});
                        if (check_qsh(d).empty()) ++valid_tables;
                    }
                    // Delta_S goes B -> ideals(A), so tables A -> ideals(B) match subordinations B -> A.
                    const std::uint64_t expected = std::uint64_t{1} << (m * n);
                    if (valid_tables != expected)
                        return "qsh " + shape(m, n) + ": " + std::to_string(valid_tables) + " valid tables, expected " + std::to_string(expected);
                    return std::nullopt;
                }));
        }
    c.add("qsh-axioms", std::move(valid));
    c.add("from-qsh-after-to-qsh", std::move(from_to));
    c.add("to-qsh-after-from-qsh", std::move(to_from));
    c.add("qsh-count", std::move(counts));
    c.add("qsh-identity-laws", std::move(unit));

    std::vector<Block> ids;
    for (int n = 0; n <= top; ++n)
        ids.push_back(single([n]() -> Outcome {
            const BoolAlg a(n);
            if (to_qsh(Subordination::order(a)) != qsh_identity(a)) return "to_qsh(<=) on " + std::to_string(n) + " atoms";
            if (from_qsh(qsh_identity(a)) != Subordination::order(a)) return "from_qsh(I) on " + std::to_string(n) + " atoms";
            return std::nullopt;
        }));
    c.add("identity-correspondence", std::move(ids));

    std::vector<Block> anti;
    for (int x = 0; x <= top; ++x)
        for (int y = 0; y <= top; ++y)
            for (int z = 0; z <= top; ++z)
                anti.push_back(code_block("anti " + shape(x, y, z), {x * y, y * z}, c.sampled("anti " + shape(x, y, z)), [x, y, z](const Codes& k) {
                    const Subordination s1 = sub_code(x, y, k[0]);
                    const Subordination s2 = sub_code(y, z, k[1]);
                    return fail_if(to_qsh(compose_subordinations(s1, s2)) != compose_qsh(to_qsh(s2), to_qsh(s1)),
                                   [&] { return sub_s(s1) + " ; " + sub_s(s2); });
                }));
    c.add("anti-homomorphism", std::move(anti));
}

// ---- equivalence transfer ----

void transfer_suite(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::points, 3);
    c.report.statement = "a relation is an equivalence exactly when its Clop image is an S5-subordination";
    c.space("endo-relations and endo-subordination cores up to " + std::to_string(n_max) + " points, " + mode_label(c.opt));

    std::vector<Block> fwd, back, alleg, counts;
    for (int n = 0; n <= n_max; ++n) {
        const Sampling s = c.sampled(std::to_string(n));
        fwd.push_back(code_block("transfer " + std::to_string(n), {n * n}, s, [n](const Codes& k) {
            const Rel e = rel_code(n, n, k[0]);
            const Subordination t = clop_functor(e);
            return fail_if(is_equivalence(e) != (is_subordination(t) && check_s5_axioms(t).empty()), [&] { return rel_s(e); });
        }));
        back.push_back(code_block("transfer-back " + std::to_string(n), {n * n}, s, [n](const Codes& k) {
            const Subordination t = sub_code(n, n, k[0]);
            return fail_if(check_s5_axioms(t).empty() != is_equivalence(ult_functor(t)), [&] { return sub_s(t); });
        }));
        alleg.push_back(code_block("allegory-equivalence " + std::to_string(n), {n * n}, s, [n](const Codes& k) {
            const Rel e = rel_code(n, n, k[0]);
            const bool eq = is_equivalence(e);
            return fail_if(is_allegory_equivalence<RelCalculus>(e) != eq || is_allegory_equivalence<SubCalculus>(clop_functor(e)) != eq,
                           [&] { return rel_s(e); });
        }));
        if (!c.opt.random && n * n <= 20)
            counts.push_back(single([n]() -> Outcome {
                const auto s5 = s5_subordinations(n).size();
                if (s5 != bell_number(n))
                    return std::to_string(s5) + " S5-subordinations on " + std::to_string(n) + " atoms, expected " + std::to_string(bell_number(n));
                return std::nullopt;
            }));
    }
    c.add("equivalence-iff-s5", std::move(fwd));
    c.add("s5-iff-equivalence", std::move(back));
    c.add("allegory-equivalences", std::move(alleg));
    c.add("s5-count-is-bell", std::move(counts));
}

// ---- quotient functor ----

struct SplitObject {
    int n;
    Rel e;
    QuotientData q;
    std::string label() const { return emit({"equivalence", e}); }
};

std::vector<SplitObject> split_objects(int n_max)
{
    std::vector<SplitObject> out;
    for (int n = 0; n <= n_max; ++n)
        for (const Rel& e : all_equivalences(n)) out.push_back({n, e, quotient(Carrier{n}, e)});
    return out;
}

void quotient_suite(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::points, 3);
    if (n_max > 4 && !c.opt.random) throw SizeError("quotient-functor: exhaustive sweep limited to 4 points; pass --random K");
    c.report.statement = "Q is a full and faithful functor from compatible relations to relations between quotients";
    c.space("all (X, E) with |X| <= " + std::to_string(n_max) + " and all compatible relations between them, " + mode_label(c.opt));

    const auto objects = std::make_shared<const std::vector<SplitObject>>(split_objects(n_max));
    const std::size_t k = objects->size();
    // Compatible relations for each ordered pair of objects, filtered from all relations.
    auto hom = std::make_shared<std::vector<Shared<Rel>>>(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& a = (*objects)[i];
            const auto& b = (*objects)[j];
            std::vector<Rel> rs;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (a.n * b.n)); ++code) {
                Rel r = rel_code(a.n, b.n, code);
                if (check_split_morphism(CompatibleRelation(StoneEObject(Carrier{a.n}, a.e), StoneEObject(Carrier{b.n}, b.e), r)))
                    rs.push_back(std::move(r));
            }
            (*hom)[i * k + j] = share(std::move(rs));
        }

    std::vector<Block> proj, ident;
    for (std::size_t i = 0; i < k; ++i) {
        proj.push_back(single([objects, i]() -> Outcome {
            const auto& o = (*objects)[i];
            const Rel& p = o.q.projection;
            if (compose(p, converse(p)) != o.e) return o.label() + ": pi then its converse is not E";
            if (compose(converse(p), p) != Rel::identity(o.q.quotient_carrier())) return o.label() + ": converse then pi is not id";
            if (!is_map(p)) return o.label() + ": projection is not a map";
            return std::nullopt;
        }));
        ident.push_back(single([objects, i]() -> Outcome {
            const auto& o = (*objects)[i];
            return fail_if(q_functor(o.e, o.q, o.q) != Rel::identity(o.q.quotient_carrier()), [&] { return o.label(); });
        }));
    }
    c.add("projection-invariants", std::move(proj));
    c.add("Q-preserves-identities", std::move(ident));

    std::vector<Block> round, full, count, maps, isos;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& a = (*objects)[i];
            const auto& b = (*objects)[j];
            const std::string tag = std::to_string(i) + "-" + std::to_string(j);
            const Shared<Rel> rs = (*hom)[i * k + j];
            round.push_back(list_block("round-trip " + tag, rs, c.sampled("round " + tag), [a, b](const Rel& r) {
                return fail_if(q_lift(q_functor(r, a.q, b.q), a.q, b.q) != r, [&] { return rel_s(r) + " from " + a.label() + " to " + b.label(); });
            }));
            maps.push_back(list_block("map " + tag, rs, c.sampled("map " + tag), [a, b](const Rel& r) {
                const CompatibleRelation m(StoneEObject(Carrier{a.n}, a.e), StoneEObject(Carrier{b.n}, b.e), r);
                return fail_if(split_is_map(m) != is_map(q_functor(r, a.q, b.q)), [&] { return rel_s(r) + " from " + a.label() + " to " + b.label(); });
            }));
            const int ka = a.q.quotient_carrier().size;
            const int kb = b.q.quotient_carrier().size;
            full.push_back(code_block("fullness " + tag, {ka * kb}, c.sampled("full " + tag), [a, b, ka, kb](const Codes& code) {
                const Rel rq = rel_code(ka, kb, code[0]);
                const Rel lifted = q_lift(rq, a.q, b.q);
                const CompatibleRelation m(StoneEObject(Carrier{a.n}, a.e), StoneEObject(Carrier{b.n}, b.e), lifted);
                return fail_if(!check_split_morphism(m) || q_functor(lifted, a.q, b.q) != rq, [&] { return rel_s(rq) + " over " + a.label() + " to " + b.label(); });
            }));
            if (!c.opt.random) {
                count.push_back(single([rs, ka, kb, a, b]() -> Outcome {
                    const std::uint64_t expected = std::uint64_t{1} << (ka * kb);
                    return fail_if(rs->size() != expected, [&] {
                        return a.label() + " to " + b.label() + ": " + std::to_string(rs->size()) + " compatible relations, expected " + std::to_string(expected);
                    });
                }));
                isos.push_back(single([rs, ka, kb, a, b]() -> Outcome {
                    bool any = false;
                    for (const Rel& r : *rs)
                        if (split_is_iso(CompatibleRelation(StoneEObject(Carrier{a.n}, a.e), StoneEObject(Carrier{b.n}, b.e), r))) any = true;
                    return fail_if(any != (ka == kb), [&] { return a.label() + " vs " + b.label(); });
                }));
            }
        }
    c.add("round-trip", std::move(round));
    c.add("fullness", std::move(full));
    c.add("faithful-count", std::move(count));
    c.add("split-map-iff-quotient-map", std::move(maps));
    c.add("iso-iff-equal-class-counts", std::move(isos));

    std::vector<Block> func, closure;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                const auto& a = (*objects)[i];
                const auto& b = (*objects)[j];
                const auto& cc = (*objects)[l];
                const std::string tag = std::to_string(i) + "-" + std::to_string(j) + "-" + std::to_string(l);
                func.push_back(pair_block("functoriality " + tag, (*hom)[i * k + j], (*hom)[j * k + l], c.sampled("func " + tag),
                                          [a, b, cc](const Rel& r1, const Rel& r2) {
                                              const Rel composite = compose(r1, r2);
                                              const CompatibleRelation m(StoneEObject(Carrier{a.n}, a.e), StoneEObject(Carrier{cc.n}, cc.e), composite);
                                              if (!check_split_morphism(m)) return Outcome(rel_s(r1) + " ; " + rel_s(r2) + " is not compatible");
                                              return fail_if(q_functor(composite, a.q, cc.q) != compose(q_functor(r1, a.q, b.q), q_functor(r2, b.q, cc.q)),
                                                             [&] { return rel_s(r1) + " ; " + rel_s(r2); });
                                          }));
            }
    c.add("Q-preserves-composition", std::move(func));
}

// ---- S8 and irreducibility ----

void s8_suite(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::points, 4);
    const int rigid_max = std::min(n_max, 3);
    c.report.statement = "an equivalence is irreducible exactly when its Clop image satisfies S8, and every (X, E) is isomorphic to its quotient";
    c.space("all equivalences up to " + std::to_string(n_max) + " points, " + mode_label(c.opt));
    c.space("endo-subordination cores up to " + std::to_string(rigid_max) + " atoms for rigidity");
    c.report.notes.push_back("finite carriers are discrete, so irreducible means E = id and the Gleason cover is the space itself");

    std::vector<Block> s8, disc, proj, rigid;
    for (int n = 0; n <= n_max; ++n) {
        const auto eqs = share(all_equivalences(n));
        const Sampling s = c.sampled(std::to_string(n));
        s8.push_back(list_block("s8 " + std::to_string(n), eqs, s, [](const Rel& e) {
            return fail_if(is_irreducible(e) != check_s8(clop_functor(e)), [&] { return rel_s(e); });
        }));
        disc.push_back(list_block("discrete " + std::to_string(n), eqs, s, [](const Rel& e) {
            return fail_if(is_irreducible(e) != (e == Rel::identity(e.source())), [&] { return rel_s(e); });
        }));
        proj.push_back(list_block("projection " + std::to_string(n), eqs, s, [](const Rel& e) {
            const QuotientData q = quotient(e.source(), e);
            const CompatibleRelation pm = projection_morphism(q);
            const bool ok = check_split_morphism(pm) && split_is_iso(pm) && split_is_map(pm) && split_is_map(split_dagger(pm)) &&
                            pm.target() == gleason_finite(q.quotient_carrier()) && is_irreducible(gleason_finite(q.quotient_carrier()).equivalence());
            return fail_if(!ok, [&] { return rel_s(e); });
        }));
    }
    for (int n = 0; n <= rigid_max; ++n)
        rigid.push_back(code_block("rigidity " + std::to_string(n), {n * n}, c.sampled("rigid " + std::to_string(n)), [n](const Codes& k) {
            const Subordination t = sub_code(n, n, k[0]);
            return fail_if(check_devries_algebra(t.source(), t).empty() != (t == Subordination::order(t.source())), [&] { return sub_s(t); });
        }));
    c.add("irreducible-iff-s8", std::move(s8));
    c.add("irreducible-iff-discrete", std::move(disc));
    c.add("projection-is-iso-to-gleason", std::move(proj));
    c.add("finite-rigidity", std::move(rigid));
}

// ---- de Vries dual isomorphism ----

void devries_suite(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::atoms, 2);
    const int m_max = resolve(c.suite, c.opt, Unit::atoms, 2, true);
    const int top = std::max(n_max, m_max);
    if (top > 3 && !c.opt.random) throw SizeError("devries-dual-iso: exhaustive sweep limited to 3 atoms; pass --random K");
    c.report.statement = "de Vries morphisms and map-subordinations are dually isomorphic, star composition corresponding to composition";
    c.space("de Vries morphisms and map-subordinations up to " + std::to_string(top) + " atoms, " + mode_label(c.opt));
    c.report.notes.push_back("finite de Vries algebras have proximity equal to <=, so every instance is degenerate");

    std::vector<Shared<DeVriesMorphism>> dv(static_cast<std::size_t>((top + 1) * (top + 1)));
    std::vector<Shared<Subordination>> ms(dv.size());
    auto at = [top](int a, int b) { return static_cast<std::size_t>(a * (top + 1) + b); };
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b) {
            dv[at(a, b)] = share(all_devries_morphisms(a, b));
            ms[at(a, b)] = share(all_map_subs(a, b));
        }

    std::vector<Block> counts, m2s, s2m, ids, agree, interp;
    for (int a = 0; a <= n_max; ++a)
        for (int b = 0; b <= m_max; ++b) {
            const auto fs = dv[at(a, b)];
            const auto ss = ms[at(b, a)];
            const std::string tag = shape(a, b);
            if (!c.opt.random)
                counts.push_back(single([fs, ss, a, b]() -> Outcome {
                    std::uint64_t expected = 1;
                    for (int i = 0; i < b; ++i) expected *= static_cast<std::uint64_t>(a);
                    if (fs->size() != expected || ss->size() != expected)
                        return shape(a, b) + ": " + std::to_string(fs->size()) + " morphisms, " + std::to_string(ss->size()) +
                               " map-subordinations, expected " + std::to_string(expected);
                    return std::nullopt;
                }));
            m2s.push_back(list_block("morphism-to-map " + tag, fs, c.sampled("m2s " + tag), [ss](const DeVriesMorphism& f) -> Outcome {
                const Subordination s = morphism_to_subordination(f);
                const Subordination le_b = f.target().proximity();
                const Subordination le_a = f.source().proximity();
                if (!check_devries_morphism(f).empty()) return fn_s(f) + " fails M1-M4";
                if (!is_subordination(s) || !is_compatible(s, le_b, le_a) || !check_map_conditions(s, le_b, le_a)) return fn_s(f) + ": S_f is not a map";
                if (std::find(ss->begin(), ss->end(), s) == ss->end()) return fn_s(f) + ": S_f not enumerated";
                return fail_if(subordination_to_morphism(s, f.target(), f.source()) != f, [&] { return fn_s(f); });
            }));
            s2m.push_back(list_block("map-to-morphism " + tag, ss, c.sampled("s2m " + tag), [fs](const Subordination& s) -> Outcome {
                const DeVriesAlgebra da = DeVriesAlgebra::canonical(s.source().atom_count());
                const DeVriesAlgebra db = DeVriesAlgebra::canonical(s.target().atom_count());
                const DeVriesMorphism f = subordination_to_morphism(s, da, db);
                if (!check_devries_morphism(f).empty()) return sub_s(s) + ": f_S fails M1-M4";
                if (std::find(fs->begin(), fs->end(), f) == fs->end()) return sub_s(s) + ": f_S not enumerated";
                return fail_if(morphism_to_subordination(f) != s, [&] { return sub_s(s); });
            }));
            interp.push_back(list_block("interpolation " + tag, ss, c.sampled("interp " + tag), [](const Subordination& s) -> Outcome {
                const DeVriesAlgebra da = DeVriesAlgebra::canonical(s.source().atom_count());
                const DeVriesAlgebra db = DeVriesAlgebra::canonical(s.target().atom_count());
                const DeVriesMorphism f = subordination_to_morphism(s, da, db);
                for (const auto& [b1, b2] : db.proximity().pairs())
                    if (!s.related(f(Element{b1}), Element{b2}))
                        return sub_s(s) + " at (" + std::to_string(b1) + "," + std::to_string(b2) + ")";
                return std::nullopt;
            }));
            agree.push_back(code_block("map-agreement " + tag, {a * b}, c.sampled("agree " + tag), [a, b](const Codes& k) {
                const Subordination s = sub_code(a, b, k[0]);
                const Subordination le_a = Subordination::order(s.source());
                const Subordination le_b = Subordination::order(s.target());
                const bool conditions = is_compatible(s, le_a, le_b) && check_map_conditions(s, le_a, le_b);
                const CompatibleSubordination m(SubS5Object(s.source(), le_a), SubS5Object(s.target(), le_b), s);
                return fail_if(conditions != split_is_map(m) || conditions != is_map(ult_functor(s)), [&] { return sub_s(s); });
            }));
        }
    for (int a = 0; a <= top; ++a)
        ids.push_back(single([a]() -> Outcome {
            const DeVriesAlgebra d = DeVriesAlgebra::canonical(a);
            if (morphism_to_subordination(devries_identity(d)) != d.proximity()) return "S_id on " + std::to_string(a) + " atoms";
            if (subordination_to_morphism(d.proximity(), d, d) != devries_identity(d)) return "f_<= on " + std::to_string(a) + " atoms";
            return std::nullopt;
        }));
    c.add("equinumerous", std::move(counts));
    c.add("f-of-S-f", std::move(m2s));
    c.add("S-of-f-S", std::move(s2m));
    c.add("identities", std::move(ids));
    c.add("interpolation", std::move(interp));
    c.add("map-conditions-agree", std::move(agree));

    std::vector<Block> star, comp, plain;
    for (int x = 0; x <= top; ++x)
        for (int y = 0; y <= top; ++y)
            for (int z = 0; z <= top; ++z) {
                const std::string tag = shape(x, y, z);
                star.push_back(pair_block("star " + tag, dv[at(x, y)], dv[at(y, z)], c.sampled("star " + tag),
                                          [](const DeVriesMorphism& f, const DeVriesMorphism& g) {
                                              const DeVriesMorphism gf = star_compose(g, f);
                                              return fail_if(!check_devries_morphism(gf).empty() ||
                                                                 morphism_to_subordination(gf) != compose_subordinations(morphism_to_subordination(g), morphism_to_subordination(f)),
                                                             [&] { return fn_s(f) + " then " + fn_s(g); });
                                          }));
                plain.push_back(pair_block("plain " + tag, dv[at(x, y)], dv[at(y, z)], c.sampled("plain " + tag),
                                           [](const DeVriesMorphism& f, const DeVriesMorphism& g) {
                                               return fail_if(star_compose(g, f) != plain_compose(g, f), [&] { return fn_s(f) + " then " + fn_s(g); });
                                           }));
                comp.push_back(pair_block("comp " + tag, ms[at(x, y)], ms[at(y, z)], c.sampled("comp " + tag),
                                          [](const Subordination& s1, const Subordination& s2) {
                                              const DeVriesAlgebra da = DeVriesAlgebra::canonical(s1.source().atom_count());
                                              const DeVriesAlgebra db = DeVriesAlgebra::canonical(s1.target().atom_count());
                                              const DeVriesAlgebra dc = DeVriesAlgebra::canonical(s2.target().atom_count());
                                              const DeVriesMorphism lhs = subordination_to_morphism(compose_subordinations(s1, s2), da, dc);
                                              const DeVriesMorphism rhs = star_compose(subordination_to_morphism(s1, da, db), subordination_to_morphism(s2, db, dc));
                                              return fail_if(lhs != rhs, [&] { return sub_s(s1) + " then " + sub_s(s2); });
                                          }));
            }
    c.add("S-of-star-composite", std::move(star));
    c.add("f-of-composite", std::move(comp));
    c.add("star-is-plain-composition", std::move(plain));
}

// ---- iso extraction ----

std::vector<std::vector<int>> order_automorphisms(int n)
{
    // Every element bijection, kept when it preserves and reflects <=.
    std::vector<std::vector<int>> out;
    const BoolAlg b(n);
    for (const auto& p : all_permutations(b.element_count())) {
        bool ok = true;
        for (int x = 0; x < b.element_count() && ok; ++x)
            for (int y = 0; y < b.element_count() && ok; ++y)
                ok = (((x & ~y) == 0) == ((p[x] & ~p[y]) == 0));
        if (ok) out.push_back(p);
    }
    return out;
}

std::string table_s(const std::vector<int>& t)
{
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "]";
}

void iso_suite(Ctx& c)
{
    const int n_max = resolve(c.suite, c.opt, Unit::atoms, 3);
    if (n_max > 3) throw SizeError("iso-extraction: element bijections are enumerated up to 3 atoms");
    const int pair_max = std::min(n_max, 2);
    c.report.statement = "isomorphisms of finite de Vries algebras under subordinations are exactly the structure-preserving bijections";
    c.space("all element bijections up to " + std::to_string(n_max) + " atoms, filtered to order automorphisms");
    c.space("all subordination pairs (T, Q) up to " + std::to_string(pair_max) + " atoms, " + mode_label(c.opt));
    c.report.notes.push_back("both algebras are (powerset, <=) at finite scale, so the bound identities run on degenerate instances only");

    std::vector<Block> isos, bounds, counts;
    for (int n = 0; n <= n_max; ++n) {
        const auto hs = share(order_automorphisms(n));
        if (!c.opt.random)
            counts.push_back(single([hs, n]() -> Outcome {
                std::uint64_t f = 1;
                for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
                return fail_if(hs->size() != f, [&] { return std::to_string(hs->size()) + " automorphisms on " + std::to_string(n) + " atoms"; });
            }));
        isos.push_back(list_block("iso " + std::to_string(n), hs, c.sampled("iso " + std::to_string(n)), [n](const std::vector<int>& p) -> Outcome {
            const DeVriesAlgebra d = DeVriesAlgebra::canonical(n);
            std::vector<Element> h;
            for (int v : p) h.push_back(Element{static_cast<Word>(v)});
            const Subordination t = iso_from_bijection(h, d, d);
            const Subordination q = sub_dagger(t);
            const SubS5Object obj(d.algebra(), d.proximity());
            if (!check_split_morphism(CompatibleSubordination(obj, obj, t)) || !split_is_iso(CompatibleSubordination(obj, obj, t)))
                return table_s(p) + ": induced T is not an isomorphism";
            if (q != iso_from_bijection([&] {
                    std::vector<Element> inv(h.size());
                    for (std::size_t i = 0; i < h.size(); ++i) inv[h[i].bits] = Element{static_cast<Word>(i)};
                    return inv;
                }(), d, d))
                return table_s(p) + ": dagger of T is not induced by the inverse";
            const ExtractedBijection e = iso_to_bijection(t, q, d, d);
            if (e.forward != h) return table_s(p) + ": extraction does not recover h";
            for (std::size_t i = 0; i < h.size(); ++i)
                if (e.backward[h[i].bits].bits != i) return table_s(p) + ": backward map is not the inverse";
            return std::nullopt;
        }));
        bounds.push_back(list_block("bounds " + std::to_string(n), hs, c.sampled("bounds " + std::to_string(n)), [n](const std::vector<int>& p) -> Outcome {
            const DeVriesAlgebra d = DeVriesAlgebra::canonical(n);
            std::vector<Element> h;
            for (int v : p) h.push_back(Element{static_cast<Word>(v)});
            const Subordination t = iso_from_bijection(h, d, d);
            const auto v = iso_bound_identity_violations(t, sub_dagger(t), d, d);
            if (!v.empty()) return table_s(p) + ": " + v.front().to_string();
            return std::nullopt;
        }));
    }
    c.add("automorphism-count", std::move(counts));
    c.add("bijection-gives-iso", std::move(isos));
    c.add("bound-identities", std::move(bounds));

    std::vector<Block> all_isos, iso_counts;
    for (int a = 0; a <= pair_max; ++a)
        for (int b = 0; b <= pair_max; ++b) {
            const std::string tag = shape(a, b);
            all_isos.push_back(code_block("pairs " + tag, {a * b, a * b}, c.sampled("pairs " + tag), [a, b](const Codes& k) -> Outcome {
                const Subordination t = sub_code(a, b, k[0]);
                const Subordination q = sub_code(b, a, k[1]);
                const DeVriesAlgebra da = DeVriesAlgebra::canonical(a);
                const DeVriesAlgebra db = DeVriesAlgebra::canonical(b);
                if (compose_subordinations(t, q) != da.proximity() || compose_subordinations(q, t) != db.proximity()) return std::nullopt;
                const ExtractedBijection e = iso_to_bijection(t, q, da, db);
                bool atom_permutation = a == b;
                for (int x = 0; x < da.algebra().element_count() && atom_permutation; ++x)
                    for (int y = 0; y < da.algebra().element_count() && atom_permutation; ++y)
                        atom_permutation = ((x & ~y) == 0) == ((e.forward[x].bits & ~e.forward[y].bits) == 0);
                if (!atom_permutation) return sub_s(t) + ": extracted map is not an order isomorphism";
                if (iso_from_bijection(e.forward, da, db) != t || sub_dagger(t) != q) return sub_s(t) + ": not induced by its bijection";
                const auto v = iso_bound_identity_violations(t, q, da, db);
                if (!v.empty()) return sub_s(t) + ": " + v.front().to_string();
                return std::nullopt;
            }));
            if (!c.opt.random)
                iso_counts.push_back(single([a, b]() -> Outcome {
                    std::uint64_t found = 0;
                    for (const auto& t : all_sub_cores(a, b))
                        for (const auto& q : all_sub_cores(b, a))
                            if (compose_subordinations(t, q) == Subordination::order(t.source()) &&
                                compose_subordinations(q, t) == Subordination::order(t.target()))
                                ++found;
                    std::uint64_t expected = 0;
                    if (a == b) {
                        expected = 1;
                        for (int i = 2; i <= a; ++i) expected *= static_cast<std::uint64_t>(i);
                    }
                    return fail_if(found != expected, [&] { return shape(a, b) + ": " + std::to_string(found) + " isomorphism pairs, expected " + std::to_string(expected); });
                }));
        }
    c.add("every-iso-is-a-bijection", std::move(all_isos));
    c.add("iso-count", std::move(iso_counts));
}

// ---- enumeration certification ----

template <class T>
std::vector<std::string> emitted(const std::string& kind, const std::vector<T>& xs)
{
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(emit({kind, x}));
    return out;
}

void enumeration_suite(Ctx& c)
{
    const int atoms_max = c.opt.atoms ? c.opt.atoms->first : 2;
    const int points_max = c.opt.points ? c.opt.points->first : 4;
    if (atoms_max > 2) throw SizeError("enumeration: brute-force filters run up to 2 atoms");
    if (points_max > 5) throw SizeError("enumeration: brute-force equivalences run up to 5 points");
    c.report.statement = "core-based and dual enumerations agree with brute-force element-level filtering";
    c.space("element-level relations up to " + shape(atoms_max, atoms_max) + " atoms, endo-relations up to " + std::to_string(points_max) + " points");

    std::vector<Block> subs, dvs, bells, maps, streams;
    for (int m = 0; m <= atoms_max; ++m)
        for (int n = 0; n <= atoms_max; ++n) {
            subs.push_back(single([m, n]() -> Outcome {
                auto brute = emitted("subordination", brute_force_subordinations(m, n));
                auto cores = emitted("subordination", all_sub_cores(m, n));
                std::sort(brute.begin(), brute.end());
                std::sort(cores.begin(), cores.end());
                if (brute.size() != (std::uint64_t{1} << (m * n)) || brute != cores)
                    return shape(m, n) + ": " + std::to_string(brute.size()) + " brute-force subordinations, " + std::to_string(cores.size()) + " cores";
                return std::nullopt;
            }));
            dvs.push_back(single([m, n]() -> Outcome {
                const auto brute = brute_force_devries_morphisms(m, n);
                const auto dual = all_devries_morphisms(m, n);
                std::uint64_t expected = 1;
                for (int i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(m);
                if (brute.size() != expected || brute != dual)
                    return shape(m, n) + ": " + std::to_string(brute.size()) + " M1-M4 tables, " + std::to_string(dual.size()) + " dual atom functions";
                return std::nullopt;
            }));
            maps.push_back(single([m, n]() -> Outcome {
                std::vector<std::string> brute;
                for (const auto& s : brute_force_subordinations(m, n)) {
                    const auto le_a = Subordination::order(s.source());
                    const auto le_b = Subordination::order(s.target());
                    if (is_compatible(s, le_a, le_b) && check_map_conditions(s, le_a, le_b)) brute.push_back(emit({"subordination", s}));
                }
                auto listed = emitted("subordination", all_map_subs(m, n));
                std::sort(brute.begin(), brute.end());
                std::sort(listed.begin(), listed.end());
                return fail_if(brute != listed, [&] { return shape(m, n) + ": map-subordination lists differ"; });
            }));
        }
    for (int n = 0; n <= points_max; ++n)
        bells.push_back(single([n]() -> Outcome {
            const auto listed = all_equivalences(n);
            const auto brute = brute_force_equivalences(n);
            if (listed.size() != bell_number(n) || listed != brute)
                return std::to_string(n) + " points: " + std::to_string(listed.size()) + " partitions, " + std::to_string(brute.size()) +
                       " brute-force equivalences, Bell number " + std::to_string(bell_number(n));
            return std::nullopt;
        }));

    const std::vector<InstanceSpace> spaces{
        {SpaceKind::relations, 2, 2, {}},        {SpaceKind::relations, 0, 0, {}},        {SpaceKind::equivalences, 4, 0, {}},
        {SpaceKind::sub_cores, 2, 2, {}},        {SpaceKind::compatible_subs, 2, 2, {}},  {SpaceKind::map_subs, 2, 2, {}},
        {SpaceKind::devries_morphisms, 2, 2, {}}, {SpaceKind::split_morphisms, 2, 2, {}},
    };
    for (const InstanceSpace& sp : spaces)
        streams.push_back(single([sp]() -> Outcome {
            const auto all = enumerate(sp);
            const std::string tag = to_string(sp.kind) + " " + shape(sp.first, sp.second);
            if (all.size() != count(sp)) return tag + ": stream length differs from count";
            std::set<std::string> seen;
            for (const auto& inst : all) {
                const Document d = instance_document(sp.kind, inst);
                if (!check_document(d).empty()) return tag + ": invalid instance " + emit(d);
                if (!seen.insert(emit(d)).second) return tag + ": duplicate instance " + emit(d);
            }
            InstanceSpace r = sp;
            r.random = RandomMode{7, 50};
            const auto x = enumerate(r);
            const auto y = enumerate(r);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (emit(instance_document(sp.kind, x[i])) != emit(instance_document(sp.kind, y[i]))) return tag + ": random streams differ";
            return std::nullopt;
        }));

    c.add("subordinations-brute-force", std::move(subs));
    c.add("devries-morphisms-brute-force", std::move(dvs));
    c.add("map-subordinations-brute-force", std::move(maps));
    c.add("equivalences-bell", std::move(bells));
    c.add("streams", std::move(streams));
}

struct SuiteEntry {
    const char* name;
    void (*build)(Ctx&);
};

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> suites{
        {"duality", duality},
        {"allegory-laws", allegory_suite},
        {"modular-law", modular_suite},
        {"qsh", qsh_suite},
        {"equivalence-transfer", transfer_suite},
        {"quotient-functor", quotient_suite},
        {"s8-irreducibility", s8_suite},
        {"devries-dual-iso", devries_suite},
        {"iso-extraction", iso_suite},
        {"enumeration", enumeration_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) out.emplace_back(s.name);
        return out;
    }();
    return names;
}

std::vector<Law> suite_laws(const std::string& suite, const VerifyOptions& options, Report& header)
{
    for (const auto& entry : registry())
        if (suite == entry.name) {
            header.suite = suite;
            Ctx ctx{suite, options, header, {}, Sampling{options.random, options.seed}};
            entry.build(ctx);
            return std::move(ctx.laws);
        }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace subdual
