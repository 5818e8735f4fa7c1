#include "permlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "permlab/errors.hpp"
#include "permlab/fq.hpp"
#include "permlab/numbers.hpp"

namespace permlab {

namespace {

Perm perm_from(std::vector<std::uint16_t> img) { return Perm::from_images(std::move(img)); }

std::vector<std::uint16_t> identity_images(int degree) {
    std::vector<std::uint16_t> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
    return img;
}

PermGroup checked(PermGroup g, std::uint64_t expected_order, const char* what) {
    detail::check(g.order() == expected_order, std::string(what) + " has the expected order");
    return g;
}

}  // namespace

PermGroup symmetric_group(int n) {
    if (n < 1) throw InvalidArgument("symmetric_group requires n >= 1");
    if (n == 1) return PermGroup(1);
    std::vector<std::uint16_t> swap01 = identity_images(n), cycle(static_cast<std::size_t>(n));
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    return checked(PermGroup(n, {perm_from(std::move(swap01)), perm_from(std::move(cycle))}), fact,
                   "symmetric group");
}

PermGroup alternating_group(int n) {
    if (n < 1) throw InvalidArgument("alternating_group requires n >= 1");
    if (n <= 2) return PermGroup(n);
    std::uint64_t half_fact = 1;
    for (int i = 3; i <= n; ++i) half_fact *= static_cast<std::uint64_t>(i);
    std::vector<Perm> gens{Perm::from_cycles(n, "(1,2,3)")};
    if (n >= 4) {
        std::vector<std::uint16_t> cycle = identity_images(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
        } else {
            // even n: an (n-1)-cycle on the points 2..n keeps the parity even
            for (int i = 1; i < n; ++i)
                cycle[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i == n - 1 ? 1 : i + 1);
        }
        gens.push_back(perm_from(std::move(cycle)));
    }
    return checked(PermGroup(n, std::move(gens)), half_fact, "alternating group");
}

PermGroup cyclic_group(int n) {
    if (n < 1) throw InvalidArgument("cyclic_group requires n >= 1");
    if (n == 1) return PermGroup(1);
    std::vector<std::uint16_t> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
    return checked(PermGroup(n, {perm_from(std::move(cycle))}), static_cast<std::uint64_t>(n),
                   "cyclic group");
}

PermGroup dihedral_group(int order) {
    if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral_group requires an even order >= 2");
    const int n = order / 2;
    if (n == 1) return checked(PermGroup(2, {Perm::from_cycles(2, "(1,2)")}), 2, "dihedral group");
    if (n == 2)
        return checked(
            PermGroup(4, {Perm::from_cycles(4, "(1,2)"), Perm::from_cycles(4, "(3,4)")}), 4,
            "dihedral group");
    std::vector<std::uint16_t> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % n);
        ref[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(n - 1 - i);
    }
    return checked(PermGroup(n, {perm_from(std::move(rot)), perm_from(std::move(ref))}),
                   static_cast<std::uint64_t>(order), "dihedral group");
}

// ---------------------------------------------------------------------------
// Projective-line and matrix constructions
// ---------------------------------------------------------------------------

namespace {

// Generators of the Moebius action on the projective line over F_q:
// the points are 0..q-1 (field elements) plus q (the infinite point).
std::vector<Perm> moebius_generators(const Fq& f, std::uint32_t multiplier) {
    const std::uint32_t q = f.size();
    const std::uint16_t inf = static_cast<std::uint16_t>(q);
    std::vector<std::uint16_t> t(q + 1), m(q + 1), s(q + 1);
    for (std::uint32_t z = 0; z < q; ++z) {
        t[z] = static_cast<std::uint16_t>(f.add(z, 1));
        m[z] = static_cast<std::uint16_t>(f.mul(multiplier, z));
        s[z] = z == 0 ? inf : static_cast<std::uint16_t>(f.neg(f.inv(z)));
    }
    t[inf] = inf;
    m[inf] = inf;
    s[inf] = 0;
    return {perm_from(std::move(t)), perm_from(std::move(m)), perm_from(std::move(s))};
}

}  // namespace

PermGroup psl2(std::uint32_t q) {
    if (q < 2) throw InvalidArgument("psl2 requires a prime power q >= 2");
    Fq f(q);
    // multiplier generating the squares: the square of a full generator
    const std::uint32_t mu = f.mul(f.generator(), f.generator());
    const std::uint64_t d = (q % 2 == 0) ? 1 : 2;
    const std::uint64_t order =
        static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1) / d;
    return checked(PermGroup(static_cast<int>(q) + 1, moebius_generators(f, mu)), order, "psl2");
}

PermGroup pgl2(std::uint32_t q) {
    if (q < 2) throw InvalidArgument("pgl2 requires a prime power q >= 2");
    Fq f(q);
    const std::uint64_t order =
        static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
    return checked(PermGroup(static_cast<int>(q) + 1, moebius_generators(f, f.generator())), order,
                   "pgl2");
}

namespace {

// Row-vector action of a matrix list over F_q on a fixed point enumeration.
// Points are the vectors accepted by `keep`, normalized by `canon`, in
// increasing integer-code order (little-endian base-q digits).
struct VectorAction {
    const Fq& f;
    int n;
    std::vector<std::vector<std::uint32_t>> points;
    std::vector<std::int32_t> point_id;  // by integer code

    VectorAction(const Fq& field, int dim) : f(field), n(dim) {}

    static std::uint64_t code_of(const std::vector<std::uint32_t>& v, std::uint32_t q) {
        std::uint64_t code = 0;
        for (std::size_t i = v.size(); i-- > 0;) code = code * q + v[i];
        return code;
    }

    template <class Keep, class Canon>
    void enumerate(Keep keep, Canon canon) {
        const std::uint32_t q = f.size();
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        point_id.assign(total, -1);
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (int i = 0; i < n; ++i) {
                v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % q);
                c /= q;
            }
            if (!keep(v)) continue;
            std::vector<std::uint32_t> rep = canon(v);
            if (code_of(rep, q) != code) continue;  // not the canonical representative
            point_id[code] = static_cast<std::int32_t>(points.size());
            points.push_back(rep);
        }
    }

    // matrix[i][j]: the image of basis vector e_i has j-th coordinate m[i][j];
    // a row vector v maps to w with w_j = sum_i v_i m[i][j].
    template <class Canon>
    Perm matrix_perm(const std::vector<std::vector<std::uint32_t>>& m, Canon canon) const {
        std::vector<std::uint16_t> img(points.size());
        std::vector<std::uint32_t> w(static_cast<std::size_t>(n));
        for (std::size_t pt = 0; pt < points.size(); ++pt) {
            const auto& v = points[pt];
            for (int j = 0; j < n; ++j) {
                std::uint32_t acc = 0;
                for (int i = 0; i < n; ++i)
                    acc = f.add(acc, f.mul(v[static_cast<std::size_t>(i)],
                                           m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
                w[static_cast<std::size_t>(j)] = acc;
            }
            std::vector<std::uint32_t> rep = canon(w);
            const std::int32_t id = point_id[code_of(rep, f.size())];
            detail::check(id >= 0, "matrix action stays on the enumerated points");
            img[pt] = static_cast<std::uint16_t>(id);
        }
        return Perm::from_images(std::move(img));
    }
};

bool is_zero_vector(const std::vector<std::uint32_t>& v) {
    for (std::uint32_t c : v)
        if (c != 0) return false;
    return true;
}

}  // namespace

PermGroup sl2_on_vectors(std::uint32_t q) {
    if (q < 2) throw InvalidArgument("sl2_on_vectors requires a prime power q >= 2");
    Fq f(q);
    VectorAction act(f, 2);
    act.enumerate([](const std::vector<std::uint32_t>& v) { return !is_zero_vector(v); },
                  [](const std::vector<std::uint32_t>& v) { return v; });
    auto ident = [](const std::vector<std::uint32_t>& v) { return v; };

    std::vector<Perm> gens;
    // transvections [[1,a],[0,1]] for a = 1 and a = generator
    for (std::uint32_t a : {1u, f.generator()}) {
        gens.push_back(act.matrix_perm({{1, a}, {0, 1}}, ident));
        if (f.generator() == 1) break;
    }
    // [[0,1],[-1,0]]
    gens.push_back(act.matrix_perm({{0, 1}, {f.neg(1), 0}}, ident));

    const std::uint64_t qq = q;
    return checked(PermGroup(static_cast<int>(qq * qq - 1), std::move(gens)), qq * (qq * qq - 1),
                   "sl2_on_vectors");
}

PermGroup psl(int n, std::uint32_t q) {
    if (n < 2) throw InvalidArgument("psl requires dimension n >= 2");
    Fq f(q);
    const std::uint64_t point_count = [&] {
        std::uint64_t acc = 0, power = 1;
        for (int i = 0; i < n; ++i) {
            acc += power;
            power *= q;
        }
        return acc;  // 1 + q + ... + q^{n-1}
    }();
    if (point_count > limits().degree)
        throw CutoffExceeded("projective space too large for a permutation action");

    VectorAction act(f, n);
    auto canon = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out = v;
        for (std::uint32_t c : out) {
            if (c == 0) continue;
            const std::uint32_t scale = f.inv(c);
            for (std::uint32_t& x : out) x = f.mul(x, scale);
            break;
        }
        return out;
    };
    act.enumerate([](const std::vector<std::uint32_t>& v) { return !is_zero_vector(v); }, canon);
    detail::check(act.points.size() == point_count, "projective point count");

    auto matrix = [&](auto fill) {
        std::vector<std::vector<std::uint32_t>> m(
            static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        fill(m);
        return m;
    };

    std::vector<Perm> gens;
    for (std::uint32_t a : {1u, f.generator()}) {
        gens.push_back(act.matrix_perm(matrix([&](auto& m) { m[0][1] = a; }), canon));
        if (f.generator() == 1) break;
    }
    // cyclic shift with a determinant-fixing sign: e_i -> e_{i+1}, e_{n-1} -> (-1)^{n-1} e_0
    gens.push_back(act.matrix_perm(matrix([&](auto& m) {
                                       for (int i = 0; i < n; ++i)
                                           m[static_cast<std::size_t>(i)] =
                                               std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0);
                                       for (int i = 0; i + 1 < n; ++i)
                                           m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
                                       m[static_cast<std::size_t>(n - 1)][0] =
                                           (n - 1) % 2 == 0 ? 1u : f.neg(1);
                                   }),
                                   canon));

    // |PSL_n(q)| = q^{n(n-1)/2} * prod_{i=2..n}(q^i - 1) / gcd(n, q-1)
    unsigned __int128 order = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) order *= q;
    for (int i = 2; i <= n; ++i) {
        unsigned __int128 qi = 1;
        for (int j = 0; j < i; ++j) qi *= q;
        order *= qi - 1;
    }
    order /= std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(q - 1));
    if (order > static_cast<unsigned __int128>(UINT64_MAX))
        throw CutoffExceeded("group order does not fit in 64 bits");

    return checked(PermGroup(static_cast<int>(point_count), std::move(gens)),
                   static_cast<std::uint64_t>(order), "psl");
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const int da = a.degree(), db = b.degree();
    std::vector<Perm> gens;
    for (const Perm& g : a.generators()) {
        std::vector<std::uint16_t> img = identity_images(da + db);
        for (int i = 0; i < da; ++i) img[static_cast<std::size_t>(i)] = g[static_cast<std::uint16_t>(i)];
        gens.push_back(perm_from(std::move(img)));
    }
    for (const Perm& g : b.generators()) {
        std::vector<std::uint16_t> img = identity_images(da + db);
        for (int i = 0; i < db; ++i)
            img[static_cast<std::size_t>(da + i)] = static_cast<std::uint16_t>(da + g[static_cast<std::uint16_t>(i)]);
        gens.push_back(perm_from(std::move(img)));
    }
    return checked(PermGroup(da + db, std::move(gens)), a.order() * b.order(), "direct product");
}

PermGroup modular_affine_group(std::uint32_t n, std::uint32_t m) {
    if (n < 1) throw InvalidArgument("modular_affine_group requires n >= 1");
    m %= n;
    if (std::gcd(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)) != 1)
        throw InvalidArgument("modular_affine_group requires gcd(m, n) = 1");
    if (n == 1) return PermGroup(1);
    std::vector<std::uint16_t> t(n), s(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        t[x] = static_cast<std::uint16_t>((x + 1) % n);
        s[x] = static_cast<std::uint16_t>((static_cast<std::uint64_t>(m) * x) % n);
    }
    const std::uint64_t order = static_cast<std::uint64_t>(n) * multiplicative_order(m, n);
    return checked(PermGroup(static_cast<int>(n), {perm_from(std::move(t)), perm_from(std::move(s))}),
                   order, "modular affine group");
}

PermGroup example_group_72_43() {
    return checked(PermGroup(7, {Perm::from_cycles(7, "(1,2,3)"), Perm::from_cycles(7, "(2,3)(4,5)"),
                                 Perm::from_cycles(7, "(2,3)(4,5,6,7)")}),
                   72, "order-72 example group");
}

PermGroup example_group_324_160() {
    // Points: the 27 vectors of the sum-zero submodule W of (F_3)^4, in
    // increasing lexicographic order of (a,b,c,d).  Generators: translations
    // by a basis of W plus two coordinate permutations spanning Alt(4).
    std::vector<std::array<int, 4>> points;
    std::int32_t id_of[81];
    std::fill(std::begin(id_of), std::end(id_of), -1);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if ((a + b + c + d) % 3 == 0) {
                        id_of[a * 27 + b * 9 + c * 3 + d] = static_cast<std::int32_t>(points.size());
                        points.push_back({a, b, c, d});
                    }
    detail::check(points.size() == 27, "sum-zero submodule has 27 points");

    auto lookup = [&](const std::array<int, 4>& v) {
        return static_cast<std::uint16_t>(id_of[v[0] * 27 + v[1] * 9 + v[2] * 3 + v[3]]);
    };
    auto translation = [&](const std::array<int, 4>& t) {
        std::vector<std::uint16_t> img(27);
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::array<int, 4> w;
            for (int j = 0; j < 4; ++j) w[static_cast<std::size_t>(j)] = (points[i][static_cast<std::size_t>(j)] + t[static_cast<std::size_t>(j)]) % 3;
            img[i] = lookup(w);
        }
        return perm_from(std::move(img));
    };
    auto coordinate_perm = [&](const std::array<int, 4>& sigma) {
        // sigma maps coordinate position j to position sigma[j]
        std::vector<std::uint16_t> img(27);
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::array<int, 4> w;
            for (int j = 0; j < 4; ++j) w[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])] = points[i][static_cast<std::size_t>(j)];
            img[i] = lookup(w);
        }
        return perm_from(std::move(img));
    };

    std::vector<Perm> gens{
        translation({1, 2, 0, 0}),
        translation({0, 1, 2, 0}),
        translation({0, 0, 1, 2}),
        coordinate_perm({1, 2, 0, 3}),  // 3-cycle on the first three coordinates
        coordinate_perm({1, 0, 3, 2}),  // double transposition
    };
    return checked(PermGroup(27, std::move(gens)), 324, "order-324 example group");
}

// ---------------------------------------------------------------------------
// Group description files and the token grammar
// ---------------------------------------------------------------------------

GroupSpecFile parse_group_spec(std::string_view text) {
    GroupSpecFile out;
    bool have_degree = false;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        const std::string where = " (line " + std::to_string(line_no) + ")";
        if (key == "degree") {
            long long n = -1;
            if (!(fields >> n) || n < 1 || n > 65535)
                throw ParseError("invalid degree" + where);
            if (have_degree) throw ParseError("duplicate degree line" + where);
            out.degree = static_cast<int>(n);
            have_degree = true;
        } else if (key == "name") {
            std::string rest;
            std::getline(fields, rest);
            const auto start = rest.find_first_not_of(" \t");
            out.name = start == std::string::npos ? "" : rest.substr(start);
        } else if (key == "gen") {
            if (!have_degree) throw ParseError("gen line before degree line" + where);
            std::string rest;
            std::getline(fields, rest);
            out.generators.push_back(Perm::from_cycles(out.degree, rest));
        } else if (key == "expect-order") {
            unsigned long long n = 0;
            if (!(fields >> n) || n < 1) throw ParseError("invalid expect-order" + where);
            out.expect_order = n;
        } else {
            throw ParseError("unknown key '" + key + "'" + where);
        }
    }
    if (!have_degree) throw ParseError("group description has no degree line");
    return out;
}

PermGroup build_group(const GroupSpecFile& spec) {
    PermGroup g(spec.degree, spec.generators);
    if (spec.expect_order && g.order() != *spec.expect_order)
        throw InvalidArgument("group order " + std::to_string(g.order()) +
                              " does not match expect-order " + std::to_string(*spec.expect_order));
    return g;
}

std::string named_group_grammar() {
    return "Alt(n), Sym(n), C(n), D(2n), PSL(n,q), PGL(2,q), SL(2,q), Ex72_43, Ex324_160";
}

PermGroup named_group(const std::string& token) {
    std::string name;
    std::vector<long long> args;
    std::size_t i = 0;
    while (i < token.size() && (std::isalnum(static_cast<unsigned char>(token[i])) || token[i] == '_'))
        name += token[i++];
    if (i < token.size()) {
        if (token[i] != '(' || token.back() != ')')
            throw ParseError("malformed group token '" + token + "'; expected " + named_group_grammar());
        std::string inner = token.substr(i + 1, token.size() - i - 2);
        std::istringstream fields(inner);
        std::string part;
        while (std::getline(fields, part, ',')) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(part, &used);
                while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
                if (used != part.size()) throw std::invalid_argument(part);
                args.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("non-numeric argument in group token '" + token + "'");
            }
        }
    }

    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw ParseError("group token '" + token + "' expects " + std::to_string(n) +
                             " argument(s); grammar: " + named_group_grammar());
    };
    auto positive = [&](long long v, const char* what) {
        if (v < 1 || v > 65535) throw ParseError(std::string("argument out of range for ") + what);
        return static_cast<std::uint32_t>(v);
    };

    if (name == "Alt") {
        want(1);
        return alternating_group(static_cast<int>(positive(args[0], "Alt")));
    }
    if (name == "Sym") {
        want(1);
        return symmetric_group(static_cast<int>(positive(args[0], "Sym")));
    }
    if (name == "C") {
        want(1);
        return cyclic_group(static_cast<int>(positive(args[0], "C")));
    }
    if (name == "D") {
        want(1);
        return dihedral_group(static_cast<int>(positive(args[0], "D")));
    }
    if (name == "PSL") {
        want(2);
        const int n = static_cast<int>(positive(args[0], "PSL"));
        const std::uint32_t q = positive(args[1], "PSL");
        return n == 2 ? psl2(q) : psl(n, q);
    }
    if (name == "PGL") {
        want(2);
        if (args[0] != 2) throw ParseError("only PGL(2,q) is constructible");
        return pgl2(positive(args[1], "PGL"));
    }
    if (name == "SL") {
        want(2);
        if (args[0] != 2) throw ParseError("only SL(2,q) is constructible");
        return sl2_on_vectors(positive(args[1], "SL"));
    }
    if (name == "Ex72_43") {
        want(0);
        return example_group_72_43();
    }
    if (name == "Ex324_160") {
        want(0);
        return example_group_324_160();
    }
    throw ParseError("unknown group token '" + token + "'; expected " + named_group_grammar());
}

}  // namespace permlab
