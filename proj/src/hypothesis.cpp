#include "permlab/hypothesis.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permlab/constructions.hpp"
#include "permlab/errors.hpp"
#include "permlab/lattice.hpp"
#include "permlab/numbers.hpp"

namespace permlab {

namespace {

void require_prime(std::uint64_t p, const char* who) {
    if (!is_prime(p)) throw InvalidArgument(std::string(who) + ": p must be prime");
}

void require_odd_prime(std::uint64_t p, const char* who) {
    require_prime(p, who);
    if (p == 2) throw InvalidArgument(std::string(who) + ": p must be odd");
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

/// Display name for a report: the caller's name if given, otherwise the
/// catalog identification, otherwise the structural fingerprint.
std::string display_name(const PermGroup& g, const std::string& name) {
    if (!name.empty()) return name;
    if (auto id = identify(g)) return *id;
    return fingerprint(g).text();
}

void open_report(std::ostringstream& out, const char* kind) {
    out << "# permlab report v1\n";
    out << "check: " << kind << "\n";
}

void close_report(std::ostringstream& out, bool pass, std::int64_t time_ms) {
    out << "verdict: " << (pass ? "pass" : "fail") << "\n";
    if (time_ms >= 0) out << "# time-ms: " << time_ms << "\n";
}

/// True iff the group has an element whose order equals the group order.
bool is_cyclic(const PermGroup& g) {
    for (const Perm& x : g.elements())
        if (x.order() == g.order()) return true;
    return g.order() == 1;
}

}  // namespace

// --- maximal subgroup analysis ---------------------------------------------

std::vector<MaximalRow> MaximalAnalysis::witnesses() const {
    std::vector<MaximalRow> out;
    for (const MaximalRow& r : rows)
        if (!r.passes()) out.push_back(r);
    return out;
}

std::string MaximalAnalysis::to_text(std::int64_t time_ms) const {
    std::ostringstream out;
    open_report(out, "maximal-analysis");
    out << "group: " << group << "\n";
    out << "order: " << u128_to_string(group_order) << "\n";
    out << "p: " << p << "\n";
    if (!note.empty()) out << "note: " << note << "\n";
    out << "rows: " << rows.size() << "\n";
    for (const MaximalRow& r : rows) {
        out << "row: index=" << u128_to_string(r.index) << " order=" << u128_to_string(r.order)
            << " classes=";
        if (r.class_length > 0)
            out << r.class_length;
        else
            out << "?";
        out << " prime=" << yesno(r.prime_index) << " nilpotent="
            << (r.p_nilpotent.has_value() ? yesno(*r.p_nilpotent) : "untested")
            << " type=" << r.type << "\n";
    }
    for (const MaximalRow& r : rows)
        if (!r.passes())
            out << "witness: index=" << u128_to_string(r.index)
                << " order=" << u128_to_string(r.order) << " type=" << r.type << "\n";
    close_report(out, verdict, time_ms);
    return out.str();
}

MaximalAnalysis analyze_maximals(const PermGroup& g, std::uint64_t p, const std::string& name) {
    require_prime(p, "analyze_maximals");

    MaximalAnalysis a;
    a.group = display_name(g, name);
    a.group_order = g.order();
    a.p = p;
    a.p_divides_order = g.order() % p == 0;
    if (!a.p_divides_order)
        a.note = "p does not divide the group order; every subgroup is a p'-group";

    for (const SubgroupClass& c : maximal_classes(g)) {
        MaximalRow row;
        row.index = c.index;
        row.order = c.order;
        row.class_length = c.class_length;
        row.prime_index = is_prime(c.index);
        row.p_nilpotent = is_p_nilpotent(c.representative, p);
        row.type = identify(c.representative).value_or("-");

        if (!row.passes()) {
            // Re-verify both disqualifying facts through routes independent
            // of the primary tests: compositeness by full factorization,
            // non-p-nilpotency by the largest-normal-coprime-subgroup route.
            int exponent_sum = 0;
            for (const auto& [q, e] : factorize(c.index)) exponent_sum += e;
            detail::check(exponent_sum >= 2, "failing maximal class index is not composite");
            detail::check(
                p_prime_core(c.representative, p).order() !=
                    p_prime_part(c.representative.order(), p),
                "failing maximal class has a coprime core of full coprime order");
        }
        a.rows.push_back(std::move(row));
    }

    std::stable_sort(a.rows.begin(), a.rows.end(),
                     [](const MaximalRow& x, const MaximalRow& y) { return x.index < y.index; });
    a.verdict = std::all_of(a.rows.begin(), a.rows.end(),
                            [](const MaximalRow& r) { return r.passes(); });
    return a;
}

// --- large-group catalog ----------------------------------------------------

namespace {

PermGroup build_frobenius_31_5() { return modular_affine_group(31, 2); }

std::vector<LargeGroupEntry> build_large_group_catalog() {
    std::vector<LargeGroupEntry> catalog;

    {
        // Order 9999360 = 2^10 * 3^2 * 5 * 7 * 31.  Five classes of maximal
        // subgroups: two parabolic classes of prime index 31, two parabolic
        // classes of order 64512, and the normalizer of a Singer cycle,
        // a Frobenius group of order 155.
        LargeGroupEntry e;
        e.name = "PSL(5,2)";
        e.order = 9999360;
        e.provenance = "maximal subgroup list: ATLAS of Finite Groups, L5(2)";
        e.descriptors = {
            {DescriptorKind::prime_index, 31, 322560, "point-stabilizer parabolic", nullptr},
            {DescriptorKind::prime_index, 31, 322560, "hyperplane-stabilizer parabolic", nullptr},
            {DescriptorKind::coprime_order, 155, 64512, "line-stabilizer parabolic", nullptr},
            {DescriptorKind::coprime_order, 155, 64512, "plane-stabilizer parabolic", nullptr},
            {DescriptorKind::constructible, 64512, 155, "C31:C5", &build_frobenius_31_5},
        };
        catalog.push_back(std::move(e));
    }

    {
        // PSL(3,q) for q = 2^9: since gcd(3, q-1) = 1 the group is SL(3,q)
        // itself, of order q^3 (q^2-1)(q^3-1).  Maximal subgroups: the two
        // parabolic classes of prime index q^2+q+1 = 262657, the torus
        // normalizer (C_{q-1})^2 : Sym(3), the Singer-cycle normalizer
        // C_{q^2+q+1} : C3, and the subfield subgroup PSL(3,8).
        const unsigned __int128 qc = 512;
        const unsigned __int128 q2 = qc * qc;
        const unsigned __int128 q3 = q2 * qc;
        LargeGroupEntry e;
        e.name = "PSL(3,512)";
        e.order = q3 * (q2 - 1) * (q3 - 1);
        e.provenance =
            "maximal subgroup list: Bray-Holt-Roney-Dougal, low-dimensional "
            "finite classical groups, table for L3(q)";
        const unsigned __int128 parabolic_order = e.order / 262657u;
        const unsigned __int128 torus_order = 511u * 511u * 6u;
        const unsigned __int128 singer_order = 262657u * 3u;
        const unsigned __int128 subfield_order = 16482816u;
        e.descriptors = {
            {DescriptorKind::prime_index, 262657, parabolic_order,
             "point-stabilizer parabolic", nullptr},
            {DescriptorKind::prime_index, 262657, parabolic_order,
             "line-stabilizer parabolic", nullptr},
            {DescriptorKind::coprime_order, e.order / torus_order, torus_order,
             "torus normalizer (C511xC511):Sym(3)", nullptr},
            {DescriptorKind::coprime_order, e.order / singer_order, singer_order,
             "Singer normalizer C262657:C3", nullptr},
            {DescriptorKind::coprime_order, e.order / subfield_order, subfield_order,
             "subfield subgroup PSL(3,8)", nullptr},
        };
        catalog.push_back(std::move(e));
    }

    for (const LargeGroupEntry& e : catalog)
        for (const MaximalDescriptor& d : e.descriptors)
            detail::check(d.index * d.order == e.order,
                          "catalog descriptor does not partition the group order");
    return catalog;
}

}  // namespace

const std::vector<LargeGroupEntry>& large_group_catalog() {
    static const std::vector<LargeGroupEntry> catalog = build_large_group_catalog();
    return catalog;
}

const LargeGroupEntry* find_catalog_entry(const std::string& name) {
    for (const LargeGroupEntry& e : large_group_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

MaximalAnalysis analyze_maximals_catalog(const LargeGroupEntry& entry, std::uint64_t p) {
    require_prime(p, "analyze_maximals_catalog");
    if (entry.descriptors.empty())
        throw InvalidArgument("analyze_maximals_catalog: entry '" + entry.name +
                              "' has no maximal subgroup descriptors");

    MaximalAnalysis a;
    a.group = entry.name;
    a.group_order = entry.order;
    a.p = p;
    a.p_divides_order = entry.order % p == 0;
    a.note = "maximal subgroup data from catalog (" + entry.provenance + ")";

    constexpr unsigned __int128 u64_max = ~std::uint64_t{0};
    for (const MaximalDescriptor& d : entry.descriptors) {
        if (d.index < 2 || d.order < 1 || d.index * d.order != entry.order)
            throw InvalidArgument("analyze_maximals_catalog: descriptor '" + d.label +
                                  "' does not partition the order of " + entry.name);
        MaximalRow row;
        row.index = d.index;
        row.order = d.order;
        row.class_length = 0;
        row.type = d.label;
        row.prime_index = d.index <= u64_max && is_prime(static_cast<std::uint64_t>(d.index));

        switch (d.kind) {
            case DescriptorKind::prime_index:
                if (!row.prime_index)
                    throw InvalidArgument("analyze_maximals_catalog: descriptor '" + d.label +
                                          "' declares a prime index but the index is composite");
                row.p_nilpotent = std::nullopt;
                break;
            case DescriptorKind::coprime_order:
                if (d.order % p == 0)
                    throw InvalidArgument("analyze_maximals_catalog: descriptor '" + d.label +
                                          "' declares an order coprime to p, but p divides it");
                row.p_nilpotent = true;  // a p'-group is vacuously p-nilpotent
                break;
            case DescriptorKind::constructible: {
                if (d.build == nullptr)
                    throw InvalidArgument("analyze_maximals_catalog: descriptor '" + d.label +
                                          "' has no constructor");
                const PermGroup m = d.build();
                if (static_cast<unsigned __int128>(m.order()) != d.order)
                    throw InvalidArgument("analyze_maximals_catalog: constructed group for '" +
                                          d.label + "' has the wrong order");
                row.p_nilpotent = is_p_nilpotent(m, p);
                break;
            }
        }
        a.rows.push_back(std::move(row));
    }

    std::stable_sort(a.rows.begin(), a.rows.end(),
                     [](const MaximalRow& x, const MaximalRow& y) { return x.index < y.index; });
    a.verdict = std::all_of(a.rows.begin(), a.rows.end(),
                            [](const MaximalRow& r) { return r.passes(); });
    return a;
}

// --- radical-quotient classification ----------------------------------------

std::string to_string(QuotientFamily f) {
    switch (f) {
        case QuotientFamily::simple_quotient: return "simple-quotient";
        case QuotientFamily::almost_simple_quotient: return "almost-simple-quotient";
        case QuotientFamily::psl2_power_section: return "psl2-power-section";
        case QuotientFamily::unrecognized: return "unrecognized";
    }
    return "unrecognized";
}

std::string RadicalQuotientResult::to_text(std::int64_t time_ms) const {
    std::ostringstream out;
    open_report(out, "radical-quotient");
    out << "group: " << group << "\n";
    out << "order: " << group_order << "\n";
    out << "radical-order: " << radical_order << "\n";
    out << "radical-matches-series: " << yesno(radical_matches_series) << "\n";
    out << "quotient: " << quotient_type << "\n";
    out << "family: " << to_string(family) << "\n";
    if (family == QuotientFamily::psl2_power_section) {
        out << "residual-proper: " << yesno(residual_proper) << "\n";
        out << "section: " << section_type << "\n";
        out << "section-power: " << section_power << "\n";
    }
    if (!detail.empty()) out << "detail: " << detail << "\n";
    close_report(out, family != QuotientFamily::unrecognized, time_ms);
    return out.str();
}

namespace {

/// Field size of the projective-line groups the classifier can name.
std::optional<std::uint64_t> psl2_parameter(const std::string& type) {
    if (type == "Alt(5)") return 5;  // PSL(2,4) = PSL(2,5); the family test rejects both
    if (type.rfind("PSL(2,", 0) == 0 && type.back() == ')') {
        const std::string digits = type.substr(6, type.size() - 7);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return std::stoull(digits);
    }
    return std::nullopt;
}

}  // namespace

RadicalQuotientResult classify_radical_quotient(const PermGroup& g, const std::string& name) {
    if (is_solvable(g))
        throw InvalidArgument("classify_radical_quotient: the group is solvable");

    RadicalQuotientResult r;
    r.group = display_name(g, name);
    r.group_order = g.order();

    const PermGroup s = solvable_radical(g);
    r.radical_order = s.order();

    const PSeries series = upper_p_series(g, 2);
    const PermGroup& two_term =
        series.terms[std::min<std::size_t>(2, series.terms.size() - 1)];
    r.radical_matches_series = s.same_group_as(two_term);

    const PermGroup q = s.is_trivial() ? g : quotient(g, s).image;
    const std::optional<std::string> q_type = identify(q);
    r.quotient_type = q_type.value_or("-");

    if (q_type == "Alt(5)" || q_type == "PSL(2,7)" || q_type == "PSL(2,11)") {
        r.family = QuotientFamily::simple_quotient;
        return r;
    }
    if (q_type == "Sym(5)" || q_type == "PGL(2,7)") {
        r.family = QuotientFamily::almost_simple_quotient;
        return r;
    }

    // Remaining shape: the subgroup generated by all odd-order elements,
    // modulo the second series term, must be a direct power of a
    // recognized-family PSL(2,q).
    const PermGroup residual = p_residual(g, 2);
    r.residual_proper = residual.order() < g.order();
    if (!is_subgroup_of(two_term, residual)) {
        r.family = QuotientFamily::unrecognized;
        r.detail = "series term not contained in the odd-order residual";
        return r;
    }
    const PermGroup section =
        two_term.is_trivial() ? residual : quotient(residual, two_term).image;

    auto accept = [&](const std::string& type, int power) {
        const auto q0 = psl2_parameter(type);
        if (!q0 || !psl2_family(*q0).member) return false;
        r.family = QuotientFamily::psl2_power_section;
        r.section_type = type;
        r.section_power = power;
        return true;
    };

    if (const auto sec_type = identify(section)) {
        if (accept(*sec_type, 1)) return r;
        r.family = QuotientFamily::unrecognized;
        r.detail = "section " + *sec_type + " is not in the recognized family";
        return r;
    }

    // Not a single catalog group: try a direct power of one.
    const std::vector<PermGroup> minimals = minimal_normal_subgroups(section);
    if (!minimals.empty()) {
        const auto base_type = identify(minimals.front());
        unsigned __int128 product = 1;
        bool uniform = base_type.has_value();
        for (const PermGroup& n : minimals) {
            uniform = uniform && identify(n) == base_type;
            product *= n.order();
        }
        if (uniform && product == section.order() &&
            accept(*base_type, static_cast<int>(minimals.size())))
            return r;
    }
    r.family = QuotientFamily::unrecognized;
    r.detail = "section is not a recognizable direct power";
    return r;
}

// --- bounded upper series ----------------------------------------------------

std::string SeriesBoundCheck::to_text(std::int64_t time_ms) const {
    std::ostringstream out;
    open_report(out, "series-bound");
    out << "group: " << group << "\n";
    out << "order: " << group_order << "\n";
    out << "p: " << p << "\n";
    out << "term-orders: ";
    for (std::size_t i = 0; i < series.terms.size(); ++i) {
        if (i) out << ",";
        out << series.terms[i].order();
    }
    out << "\n";
    out << "term-limit: " << term_limit << "\n";
    out << "p-length: " << series.p_length << "\n";
    out << "reaches-group: " << yesno(series.reaches_group) << "\n";
    close_report(out, pass, time_ms);
    return out.str();
}

namespace {

SeriesBoundCheck bounded_series_check(const PermGroup& g, std::uint64_t p,
                                      std::size_t term_limit, const std::string& name) {
    SeriesBoundCheck c;
    c.group = display_name(g, name);
    c.group_order = g.order();
    c.p = p;
    c.series = upper_p_series(g, p);
    c.term_limit = term_limit;
    c.reaches = c.series.reaches_group && c.series.terms.size() <= term_limit + 1;
    c.length_ok = c.series.p_length <= 2;
    c.pass = c.reaches && c.length_ok;
    return c;
}

}  // namespace

SeriesBoundCheck verify_two_length_bound(const PermGroup& g, const std::string& name) {
    if (!is_solvable(g))
        throw InvalidArgument("verify_two_length_bound: the group is not solvable");
    return bounded_series_check(g, 2, 4, name);
}

SeriesBoundCheck verify_p_length_bound(const PermGroup& g, std::uint64_t p,
                                       const std::string& name) {
    require_odd_prime(p, "verify_p_length_bound");
    if (!is_p_solvable(g, p))
        throw InvalidArgument("verify_p_length_bound: the group is not p-solvable");
    return bounded_series_check(g, p, 5, name);
}

// --- Sylow normalizers of the projective line groups -------------------------

std::string to_string(SylowNormalizerShape s) {
    switch (s) {
        case SylowNormalizerShape::defining: return "defining";
        case SylowNormalizerShape::torus_plus: return "torus-plus";
        case SylowNormalizerShape::torus_minus: return "torus-minus";
        case SylowNormalizerShape::sylow2_self: return "sylow2-self";
        case SylowNormalizerShape::alt4: return "alt4";
    }
    return "defining";
}

std::string SylowNormalizerGrid::to_text(std::int64_t time_ms) const {
    std::ostringstream out;
    open_report(out, "sylow-normalizers");
    out << "group: " << group << "\n";
    out << "order: " << group_order << "\n";
    out << "q: " << q << "\n";
    for (const SylowNormalizerCase& c : cases)
        out << "case: r=" << c.r << " normalizer-order=" << c.normalizer_order
            << " expected-order=" << c.expected_order << " shape=" << to_string(c.shape)
            << " ok=" << yesno(c.ok) << "\n";
    close_report(out, pass, time_ms);
    return out.str();
}

namespace {

/// x has order m; is N generated over <x> by an order-2 element inverting x?
bool dihedral_over(const PermGroup& n, const Perm& x) {
    const Perm x_inv = inverse(x);
    for (const Perm& y : n.elements())
        if (!y.is_identity() && y.order() == 2 && compose(y, x, y) == x_inv) return true;
    return false;
}

}  // namespace

SylowNormalizerGrid verify_sylow_normalizers_psl2(std::uint64_t q) {
    const auto pp = q >= 2 ? prime_power(q) : std::nullopt;
    if (!pp || q < 4 || q > 19)
        throw InvalidArgument(
            "verify_sylow_normalizers_psl2: q must be a prime power between 4 and 19");

    SylowNormalizerGrid grid;
    grid.q = q;
    grid.group = "PSL(2," + std::to_string(q) + ")";
    const PermGroup g = psl2(static_cast<std::uint32_t>(q));
    grid.group_order = g.order();

    const std::uint64_t t = pp->first;
    const std::uint64_t d = q % 2 == 0 ? 1 : 2;

    for (const auto& [r, exponent] : factorize(g.order())) {
        (void)exponent;
        const PermGroup rr = sylow(g, r).subgroup;
        const PermGroup n = normalizer(g, rr);

        SylowNormalizerCase c;
        c.r = r;
        c.normalizer_order = n.order();

        if (r == t) {
            // N = R x| C_{(q-1)/d}: the Sylow subgroup is normal and the
            // quotient is cyclic of order (q-1)/d (the extension splits by
            // the coprime orders).
            c.shape = SylowNormalizerShape::defining;
            c.expected_order = q * (q - 1) / d;
            c.ok = n.order() == c.expected_order && is_normal_in(rr, n) &&
                   is_cyclic(quotient(n, rr).image);
        } else if (r == 2) {
            if (q % 8 == 1 || q % 8 == 7) {
                c.shape = SylowNormalizerShape::sylow2_self;
                c.expected_order = rr.order();
                c.ok = n.same_group_as(rr);
            } else {
                c.shape = SylowNormalizerShape::alt4;
                c.expected_order = 12;
                c.ok = n.order() == 12 && fingerprint(n) == fingerprint(alternating_group(4));
            }
        } else {
            // Odd r away from the characteristic divides exactly one torus
            // order; the normalizer is dihedral over that torus.
            const std::uint64_t plus = (q + 1) / d;
            const std::uint64_t minus = (q - 1) / d;
            const std::uint64_t m = plus % r == 0 ? plus : minus;
            detail::check(m % r == 0, "prime divides neither torus order");
            c.shape = plus % r == 0 ? SylowNormalizerShape::torus_plus
                                    : SylowNormalizerShape::torus_minus;
            c.expected_order = 2 * m;
            bool shape_ok = false;
            if (n.order() == c.expected_order)
                for (const Perm& x : n.elements())
                    if (x.order() == m && dihedral_over(n, x)) {
                        shape_ok = true;
                        break;
                    }
            c.ok = shape_ok;
        }
        grid.cases.push_back(c);
    }
    grid.pass = std::all_of(grid.cases.begin(), grid.cases.end(),
                            [](const SylowNormalizerCase& c) { return c.ok; });
    return grid;
}

// --- minimal normal subgroups and their avoiding maximals --------------------

std::string WitnessSearch::to_text(std::int64_t time_ms) const {
    std::ostringstream out;
    open_report(out, "minimal-normal-witness");
    out << "group: " << group << "\n";
    out << "order: " << group_order << "\n";
    out << "p: " << p << "\n";
    for (const MinimalNormalWitness& w : witnesses) {
        out << "witness: normal-order=" << w.normal_order;
        if (w.found)
            out << " maximal-index=" << w.maximal_index << " maximal-order=" << w.maximal_order
                << " type=" << w.maximal_type;
        else
            out << " none-found";
        out << "\n";
    }
    close_report(out, pass, time_ms);
    return out.str();
}

WitnessSearch verify_minimal_normal_witnesses(const PermGroup& g, std::uint64_t p,
                                              const std::string& name) {
    require_odd_prime(p, "verify_minimal_normal_witnesses");

    WitnessSearch search;
    search.group = display_name(g, name);
    search.group_order = g.order();
    search.p = p;

    std::vector<PermGroup> qualifying;
    for (const PermGroup& n : minimal_normal_subgroups(g))
        if (!is_p_solvable(n, p)) qualifying.push_back(n);
    if (qualifying.empty())
        throw InvalidArgument(
            "verify_minimal_normal_witnesses: no minimal normal subgroup outside the "
            "p-solvable class");

    const std::vector<SubgroupClass> maximals = maximal_classes(g);
    for (const PermGroup& n : qualifying) {
        MinimalNormalWitness w;
        w.normal_order = n.order();
        for (const SubgroupClass& c : maximals) {
            // Containment of a normal subgroup is invariant across the
            // conjugacy class, so testing the representative suffices.
            if (is_subgroup_of(n, c.representative)) continue;
            if (is_p_nilpotent(c.representative, p)) continue;
            w.found = true;
            w.maximal_index = c.index;
            w.maximal_order = c.order;
            w.maximal_type = identify(c.representative).value_or("-");
            break;
        }
        search.witnesses.push_back(std::move(w));
    }
    search.pass = std::all_of(search.witnesses.begin(), search.witnesses.end(),
                              [](const MinimalNormalWitness& w) { return w.found; });
    return search;
}

}  // namespace permlab
