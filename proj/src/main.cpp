#include "capform/check.hpp"
#include "capform/discform.hpp"
#include "capform/hecke.hpp"
#include "capform/jsonio.hpp"
#include "capform/numeval.hpp"
#include "capform/orders.hpp"
#include "capform/spectra.hpp"
#include "capform/thetacoeff.hpp"
#include "capform/vvlift.hpp"
#include "capform/weilrep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace capform;

namespace {

constexpr double kPi = 3.14159265358979323846;

// bad command-line values; exits with code 2 (invariant failures exit with 1)
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
    }
}

double parse_double(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected a number for ") + what + ", got '" + s + "'");
    }
}

Rat parse_rat(const std::string& s, const char* what) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected a rational for ") + what + ", got '" + s + "'");
    }
}

long require_prime(long p) {
    auto ps = prime_factors(p);
    if (p < 2 || ps.size() != 1 || ps[0] != p) throw UsageError("--p must be a prime");
    return p;
}

OrderPtr resolve_order(const std::string& src) {
    if (src.rfind("catalog:", 0) == 0) {
        long n = parse_long(src.substr(8), "--order catalog:N");
        auto levels = catalog_levels();
        if (std::find(levels.begin(), levels.end(), n) == levels.end())
            throw UsageError("no catalog order of level " + std::to_string(n));
        return catalog_order(n);
    }
    std::ifstream in(src);
    if (!in) throw UsageError("cannot open order file: " + src);
    std::ostringstream ss;
    ss << in.rdbuf();
    return order_from_json_text(ss.str());
}

// "2:1,3:-1"; unnamed level primes default to +1
std::map<long, int> parse_al_signs(const std::string& s, long level) {
    std::map<long, int> signs;
    for (long p : prime_factors(level)) signs[p] = 1;
    if (s.empty()) return signs;
    for (const std::string& part : split(s, ',')) {
        auto kv = split(part, ':');
        if (kv.size() != 2) throw UsageError("al-signs entries must look like p:1 or p:-1");
        long p = parse_long(kv[0], "--al-signs prime");
        long e = parse_long(kv[1], "--al-signs sign");
        if (signs.find(p) == signs.end())
            throw UsageError("al-signs prime " + std::to_string(p) + " does not divide the level");
        if (e != 1 && e != -1) throw UsageError("al-signs values must be 1 or -1");
        signs[p] = static_cast<int>(e);
    }
    return signs;
}

std::array<Int, 4> parse_vec4(const std::string& s, const char* what) {
    auto parts = split(s, ',');
    if (parts.size() != 4) throw UsageError(std::string(what) + " needs four comma-separated integers");
    std::array<Int, 4> out;
    for (int t = 0; t < 4; ++t) out[t] = Int(parse_long(parts[t], what));
    return out;
}

// beta is given by rational coordinates over the order basis; it must land in
// the dual lattice (integer pairings against the order basis)
DualVector parse_beta(const DualPtr& L, const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 4) throw UsageError("--beta needs four comma-separated rationals");
    const auto& b = L->order()->basis();
    QuatElt x = parse_rat(parts[0], "--beta") * b[0];
    for (int t = 1; t < 4; ++t) x = x + parse_rat(parts[t], "--beta") * b[t];
    std::array<Rat, 4> r = L->coords_of(x);
    std::array<Int, 4> c;
    for (int t = 0; t < 4; ++t) {
        CF_DOMAIN_CHECK(r[t].get_den() == 1,
                        "beta is not in the dual lattice (pairing " << r[t].get_str() << ")");
        c[t] = r[t].get_num();
    }
    return DualVector{L, c};
}

SL2Mat parse_matrix(const std::string& s) {
    auto c = parse_vec4(s, "--matrix");
    SL2Mat m{c[0], c[1], c[2], c[3]};
    if (m.det() != 1) throw UsageError("--matrix must have determinant 1");
    return m;
}

EvalPoint parse_point(const std::string& s) {
    auto halves = split(s, ';');
    if (halves.size() != 2) throw UsageError("--point must look like x1,x2,x3,x4;y");
    auto xs = split(halves[0], ',');
    if (xs.size() != 4) throw UsageError("--point needs four x coordinates");
    EvalPoint pt;
    for (int t = 0; t < 4; ++t) pt.x[t] = parse_double(xs[t], "--point");
    pt.y = parse_double(halves[1], "--point");
    return pt;
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << j.dump(2) << "\n";
}

Json signs_json(const std::map<long, int>& signs) {
    Json j = Json::object();
    for (const auto& [p, e] : signs) j[std::to_string(p)] = e;
    return j;
}

// {"norm": "...", "terms": {"-1": "...", ...}}, arguments closest to zero first
Json fcs_json(const FormalCoeffSum& s) {
    Json terms = Json::object();
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
        terms[it->first.get_str()] = it->second.get_str();
    return Json{{"norm", s.norm().get_str()}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// plain subcommands

Json cmd_algebra(const OrderPtr& o) {
    const auto& alg = *o->algebra();
    Json j;
    j["a"] = alg.a.get_str();
    j["b"] = alg.b.get_str();
    j["disc"] = alg.disc;
    j["ramified_primes"] = alg.ramified_primes;
    return j;
}

Json cmd_order(const OrderPtr& o) {
    Json j = order_to_json(*o);
    Json gram = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) row.push_back(o->gram()(r, c).get_str());
        gram.push_back(row);
    }
    j["gram"] = gram;
    j["gram_det"] = o->gram_det().get_str();
    j["maximal"] = is_maximal(*o).maximal;
    j["level"] = o->disc();
    j["dual_index"] = DualLattice::of(o)->index_in_order().get_str();
    return j;
}

Json cmd_discform(const OrderPtr& o) {
    DiscPtr D = DiscGroup::of(DualLattice::of(o));
    Json j;
    j["size"] = D->size().get_si();
    j["level"] = D->level();
    Json inv = Json::array();
    for (const Int& d : D->invariant_factors()) inv.push_back(d.get_str());
    j["invariant_factors"] = inv;
    j["oddity"] = D->oddity();
    CycNum m = milgram_sum(D);
    j["milgram"] = m.is_rational() ? m.rational_value().get_str() : m.str();
    Json symbols = Json::array();
    for (long p : prime_factors(o->disc())) {
        PSymbol sym = p_component_symbol(D, p);
        symbols.push_back(Json{{"p", p}, {"symbol", sym.text}, {"gamma", sym.gamma}});
    }
    j["symbols"] = symbols;
    return j;
}

Json cmd_weil(const OrderPtr& o, const SL2Mat& m) {
    DiscPtr D = DiscGroup::of(DualLattice::of(o));
    WeilPtr W = WeilRep::of(D);
    WeilMatrix R = W->rho(m);
    Json j;
    j["level"] = o->disc();
    j["matrix"] = Json::array({m.a.get_str(), m.b.get_str(), m.c.get_str(), m.d.get_str()});
    j["dim"] = W->dim();
    Json rows = Json::array();
    for (long r = 0; r < W->dim(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < W->dim(); ++c) row.push_back(R.entry(r, c).str());
        rows.push_back(row);
    }
    j["entries"] = rows;
    if (m.c % o->disc() == 0) j["closed_form_matches"] = (R == W->closed_form(m));
    return j;
}

Json cmd_lift(const OrderPtr& o, const std::map<long, int>& signs) {
    MaassDatum f = MaassDatum::make(o->disc(), signs);
    DiscPtr D = DiscGroup::of(DualLattice::of(o));
    Json j;
    j["level"] = o->disc();
    j["al_signs"] = signs_json(signs);
    Json comps = Json::array();
    for (const auto& [q, terms] : lift_components(f, D)) {
        Json tj = Json::array();
        for (const auto& t : terms)
            tj.push_back(Json{{"c", t.c},
                              {"coeff", t.coeff},
                              {"modulus", t.modulus},
                              {"residue", t.residue},
                              {"scale", t.scale.get_str()}});
        comps.push_back(Json{{"q", q.get_str()},
                             {"t_constant", t_transform_constant(terms).str()},
                             {"terms", tj}});
    }
    j["components"] = comps;
    return j;
}

Json cmd_coeff(const OrderPtr& o, const std::string& beta_str,
               const std::map<long, int>& signs) {
    DualPtr L = DualLattice::of(o);
    MaassDatum f = MaassDatum::make(o->disc(), signs);
    return fcs_json(a_closed_form(parse_beta(L, beta_str), f));
}

Json cmd_hecke(const OrderPtr& o, long p, const std::map<long, int>& signs,
               const std::string& beta_str) {
    Json j;
    j["p"] = p;
    if (o->disc() % p == 0) {
        DualPtr L = DualLattice::of(o);
        MaassDatum f = MaassDatum::make(o->disc(), signs);
        j["ramified"] = true;
        if (!beta_str.empty()) {
            DualVector beta = parse_beta(L, beta_str);
            j["action"] = fcs_json(ramified_action(beta, p, f));
            j["reduced"] = fcs_json(newform_reduce(ramified_action(beta, p, f), f));
        }
        auto battery = hecke_battery(L, p);
        j["battery"] = battery.size();
        j["eigenvalue"] = ramified_eigenvalue_check(p, battery, f).get_str();
    } else {
        UnramifiedEigenvalues mu = unramified_mu(p);
        j["ramified"] = false;
        j["mu1"] = mu.mu1.str();
        j["mu2"] = mu.mu2.str();
        j["mu3"] = mu.mu3.str();
    }
    return j;
}

Json cmd_lfactor(long p, bool ramified) {
    Json j;
    j["p"] = p;
    j["ramified"] = ramified;
    Json params = Json::array();
    for (const auto& m : satake_lift(ramified)) params.push_back(m.str());
    j["parameters"] = params;
    LFactorPoly f = ramified ? local_factor_ramified(p) : local_factor_unramified(p);
    Json coeffs = Json::array();
    for (long k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coeff(k).str());
    j["coefficients"] = coeffs;
    StdIdentityReport rep = std_identity_check(p, ramified);
    j["identities"] = Json{{"multiset", rep.multiset_match},
                           {"pairwise", rep.pairwise_match},
                           {"ok", rep.ok}};
    return j;
}

NumericMaass maass_from_json(const Json& mj) {
    NumericMaass f;
    f.level = mj.at("level").get<long>();
    for (const auto& [k, v] : mj.at("al_signs").items())
        f.al_signs[parse_long(k, "al_signs key")] = v.get<int>();
    f.r = mj.at("r").get<double>();
    f.n_max = mj.at("n_max").get<long>();
    for (const auto& [k, v] : mj.at("coeffs").items())
        f.coeffs[parse_long(k, "coeffs key")] = v.get<double>();
    return f;
}

Json cmd_eval(const OrderPtr& o, const std::string& maass_path, const EvalPoint& pt,
              const Rat& q_max) {
    std::ifstream in(maass_path);
    if (!in) throw UsageError("cannot open maass datum file: " + maass_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    NumericMaass f = maass_from_json(parse_json_text(ss.str(), "maass datum"));
    LiftValue v = evaluate_lift(DualLattice::of(o), f, pt, q_max);
    Json j;
    j["value"] = v.value;
    j["tail_bound"] = v.tail_bound;
    j["pairs"] = v.pairs;
    return j;
}

// ---------------------------------------------------------------------------
// verify suites

struct VerifyCtx {
    OrderPtr order;  // set when --order was given
    unsigned long seed = 12345;
};

bool all_ok(const Json& checks) {
    for (const auto& c : checks)
        if (!c.at("ok").get<bool>()) return false;
    return true;
}

Json suite_order(const VerifyCtx&) {
    Json checks = Json::array();
    for (long n : catalog_levels()) {
        auto o = catalog_order(n);
        auto cert = is_maximal(*o);
        DiscPtr D = DiscGroup::of(DualLattice::of(o));
        Int n2 = Int(n) * Int(n);
        bool ok = cert.maximal && cert.gram_det == n2 && D->size() == n2 && D->level() == n;
        checks.push_back(Json{{"level", n}, {"ok", ok}});
    }
    return Json{{"suite", "order"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

Json suite_discform(const VerifyCtx&) {
    Json checks = Json::array();
    for (long n : catalog_levels()) {
        DiscPtr D = DiscGroup::of(DualLattice::of(catalog_order(n)));
        CycNum m = milgram_sum(D);
        bool ok = m.is_rational() && m.rational_value() == Rat(-n);
        std::string symbols;
        for (long p : prime_factors(n)) {
            PSymbol sym = p_component_symbol(D, p);
            std::string expect = p == 2 ? "2_II^{-2}"
                                        : std::to_string(p) + (p % 4 == 3 ? "^{+2}" : "^{-2}");
            ok = ok && sym.gamma == -1 && sym.text == expect;
            symbols += (symbols.empty() ? "" : ",") + sym.text;
        }
        checks.push_back(Json{{"level", n},
                              {"milgram", m.is_rational() ? m.rational_value().get_str() : m.str()},
                              {"symbols", symbols},
                              {"ok", ok}});
    }
    return Json{{"suite", "discform"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

bool fits_bound(const Int& v, long bound) { return v.fits_slong_p() && std::labs(v.get_si()) <= bound; }

SL2Mat random_gamma0(std::mt19937& rng, long n) {
    std::uniform_int_distribution<long> cu(-8, 8), du(-60, 60), ku(-5, 5);
    for (;;) {
        const Int c = Int(n) * cu(rng);
        const Int d = du(rng);
        if (c == 0 && d == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
        if (g != 1) continue;
        const long k = ku(rng);
        const SL2Mat m{s + k * c, -t + k * d, c, d};
        if (!fits_bound(m.a, 10000) || !fits_bound(m.b, 10000)) continue;
        return m;
    }
}

Json suite_weil(const VerifyCtx& ctx) {
    std::mt19937 rng(static_cast<unsigned>(ctx.seed));
    Json checks = Json::array();
    for (long n : {2L, 3L, 5L, 7L}) {
        DiscPtr D = DiscGroup::of(DualLattice::of(catalog_order(n)));
        WeilPtr W = WeilRep::of(D);
        WeilMatrix S = W->rho_S();
        WeilMatrix S2 = S * S;
        SL2Mat minus1{-1, 0, 0, -1};
        bool relations = (S2 == W->closed_form(minus1));
        WeilMatrix ST = S * W->rho_T();
        relations = relations && (ST * ST * ST == S2);
        relations = relations && (S.conj_transpose() * S).is_identity();
        int matches = 0;
        for (int i = 0; i < 6; ++i) {
            SL2Mat m = random_gamma0(rng, n);
            if (W->rho(m) == W->closed_form(m)) ++matches;
        }
        checks.push_back(Json{{"level", n},
                              {"relations", relations},
                              {"closed_form_matches", matches},
                              {"ok", relations && matches == 6}});
    }
    return Json{{"suite", "weil"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

std::vector<std::map<long, int>> sign_choices(long n) {
    std::vector<long> ps = prime_factors(n);
    std::vector<std::map<long, int>> out;
    for (long mask = 0; mask < (1L << ps.size()); ++mask) {
        std::map<long, int> signs;
        for (size_t i = 0; i < ps.size(); ++i) signs[ps[i]] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(signs);
    }
    return out;
}

Json suite_coeff(const VerifyCtx&) {
    Json checks = Json::array();
    for (long n : {2L, 3L, 30L}) {
        DualPtr L = DualLattice::of(catalog_order(n));
        auto vecs = short_vectors(L, frac(4, 1));
        long tested = 0;
        bool ok = true;
        for (const auto& signs : sign_choices(n)) {
            MaassDatum f = MaassDatum::make(n, signs);
            for (const auto& [beta, q] : vecs) {
                ok = ok && equivalence_check(beta, f);
                ++tested;
            }
        }
        checks.push_back(Json{{"level", n}, {"comparisons", tested}, {"ok", ok}});
    }
    return Json{{"suite", "coeff"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

Json suite_hecke(const VerifyCtx& ctx) {
    OrderPtr o = ctx.order ? ctx.order : catalog_order(2);
    DualPtr L = DualLattice::of(o);
    Json checks = Json::array();
    for (long p : prime_factors(o->disc())) {
        auto battery = hecke_battery(L, p);
        Rat expect = Rat(p * p * p + p * p + p - 1);
        bool ok = true;
        Rat ev;
        for (const auto& signs : sign_choices(o->disc())) {
            MaassDatum f = MaassDatum::make(o->disc(), signs);
            ev = ramified_eigenvalue_check(p, battery, f);
            ok = ok && ev == expect;
        }
        checks.push_back(Json{{"p", p},
                              {"battery", battery.size()},
                              {"eigenvalue", ev.get_str()},
                              {"ok", ok}});
    }
    return Json{{"suite", "hecke"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

Json suite_spectra(const VerifyCtx&) {
    Json checks = Json::array();
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
        StdIdentityReport rep = std_identity_check(p, false);
        checks.push_back(Json{{"p", p}, {"ramified", false}, {"ok", rep.ok}});
    }
    for (long p : {2L, 3L, 5L}) {
        StdIdentityReport rep = std_identity_check(p, true);
        checks.push_back(Json{{"p", p}, {"ramified", true}, {"ok", rep.ok}});
    }
    bool torus = weyl_equivalent(gl4_to_so33(gl4_parameters()), satake_lift(false));
    checks.push_back(Json{{"check", "gl4 torus translation"}, {"ok", torus}});
    return Json{{"suite", "spectra"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

NumericMaass sample_numeric_datum() {
    NumericMaass f;
    f.level = 2;
    f.al_signs = {{2, 1}};
    f.r = 1.0;
    f.n_max = 8;
    for (long n = 1; n <= 8; ++n) {
        f.coeffs[-n] = 1.0 / n;
        f.coeffs[n] = 0.0;
    }
    return f;
}

Json suite_numeric(const VerifyCtx&) {
    Json checks = Json::array();
    double worst = 0.0;
    for (double a : {1.0, 4 * kPi})
        for (double p : {1.0, kPi})
            for (double r : {0.0, 1.0, 2.5}) worst = std::max(worst, laplace_identity_check(a, p, r));
    checks.push_back(Json{{"check", "laplace identity"}, {"max_error", worst}, {"ok", worst <= 1e-6}});

    double wworst = 0.0;
    for (double r : {0.0, 1.0, 2.5})
        for (double z : {1.0, 3.0, 6.0}) {
            double via_series = std::sqrt(z / kPi) * bessel_K_imag_series(r / 2, z / 2);
            wworst = std::max(wworst, std::abs(whittaker_w0(r, z) - via_series) / std::abs(via_series));
        }
    checks.push_back(Json{{"check", "whittaker relation"}, {"max_error", wworst}, {"ok", wworst <= 1e-8}});

    DualPtr L = DualLattice::of(catalog_order(2));
    NumericMaass f = sample_numeric_datum();
    EvalPoint pt{{0.13, 0.27, 0.05, -0.11}, 1.0};
    double base = evaluate_lift(L, f, pt, frac(2, 1)).value;
    EvalPoint shifted = pt;
    shifted.x = {pt.x[0] + 1, pt.x[1] - 2, pt.x[2] + 3, pt.x[3]};
    double moved = evaluate_lift(L, f, shifted, frac(2, 1)).value;
    bool periodic = std::abs(moved - base) <= 1e-9 * std::abs(base);
    checks.push_back(Json{{"check", "lattice periodicity"}, {"ok", periodic}});
    EvalPoint far = pt;
    far.y = 10.0;
    bool decay = std::abs(evaluate_lift(L, f, far, frac(2, 1)).value) < std::abs(base);
    checks.push_back(Json{{"check", "height decay"}, {"ok", decay}});
    return Json{{"suite", "numeric"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

Json suite_cuspidality(const VerifyCtx&) {
    DualPtr L = DualLattice::of(catalog_order(2));
    DiscPtr D = DiscGroup::of(L);
    MaassDatum f = MaassDatum::make(2, {{2, 1}});
    // key: (Nrd, u_2, delta_2, n); every class must carry one coefficient sum
    std::map<std::string, std::string> seen;
    bool ok = true;
    long vectors = 0;
    for (const auto& [beta, q] : short_vectors(L, frac(6, 1))) {
        ok = ok && !beta.is_zero();
        PrimDecomp dec = primitive_decomposition(beta);
        long delta = q_mu(disc_class(D, dec.beta0)) % 2 != 0 ? 1 : 0;
        std::string key = q.get_str() + "|" + std::to_string(dec.u.at(2)) + "|" +
                          std::to_string(delta) + "|" + dec.n.get_str();
        FormalCoeffSum a = a_closed_form(beta, f);
        std::ostringstream repr;
        repr << a.norm().get_str();
        for (const auto& [m, c] : a.terms()) repr << ";" << m.get_str() << ":" << c.get_str();
        auto [it, fresh] = seen.emplace(key, repr.str());
        if (!fresh) ok = ok && it->second == repr.str();
        ++vectors;
    }
    Json checks = Json::array();
    checks.push_back(Json{{"check", "invariant classes determine coefficients"},
                          {"vectors", vectors},
                          {"classes", seen.size()},
                          {"ok", ok}});
    return Json{{"suite", "cuspidality"}, {"checks", checks}, {"ok", all_ok(checks)}};
}

Json run_suite(const std::string& name, const VerifyCtx& ctx) {
    static const std::vector<std::pair<std::string, Json (*)(const VerifyCtx&)>> kSuites = {
        {"order", suite_order},       {"discform", suite_discform},
        {"weil", suite_weil},         {"coeff", suite_coeff},
        {"hecke", suite_hecke},       {"spectra", suite_spectra},
        {"numeric", suite_numeric},   {"cuspidality", suite_cuspidality},
    };
    if (name == "all") {
        Json suites = Json::array();
        bool ok = true;
        for (const auto& [n, fn] : kSuites) {
            Json s = fn(ctx);
            ok = ok && s.at("ok").get<bool>();
            suites.push_back(s);
        }
        return Json{{"suite", "all"}, {"suites", suites}, {"ok", ok}};
    }
    for (const auto& [n, fn] : kSuites)
        if (n == name) return fn(ctx);
    throw UsageError("unknown suite: " + name + " (try order, discform, weil, coeff, hecke, "
                     "spectra, numeric, cuspidality, all)");
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic for the theta lift of Maass forms from definite "
                 "quaternion orders"};
    app.require_subcommand(1);

    std::string order_src = "catalog:2", out_path, signs_str, beta_str, matrix_str;
    std::string maass_path, point_str = "0,0,0,0;1", qmax_str = "6", suite = "all";
    long p_arg = 2;
    bool ramified = false;
    unsigned long seed = 12345;

    auto add_common = [&](CLI::App* cmd, bool with_signs) {
        cmd->add_option("--order", order_src, "catalog:N or a JSON order file");
        cmd->add_option("--out", out_path, "write JSON here instead of stdout");
        if (with_signs)
            cmd->add_option("--al-signs", signs_str, "Atkin-Lehner signs, e.g. 2:1,3:-1");
    };

    auto* c_algebra = app.add_subcommand("algebra", "ambient quaternion algebra");
    add_common(c_algebra, false);
    auto* c_order = app.add_subcommand("order", "order basis, Gram matrix, maximality");
    add_common(c_order, false);
    auto* c_disc = app.add_subcommand("discform", "discriminant form invariants");
    add_common(c_disc, false);
    auto* c_weil = app.add_subcommand("weil", "Weil representation matrix of an SL2(Z) element");
    add_common(c_weil, false);
    c_weil->add_option("--matrix", matrix_str, "a,b,c,d with ad-bc=1")->required();
    auto* c_lift = app.add_subcommand("lift", "vector-valued lift components");
    add_common(c_lift, true);
    auto* c_coeff = app.add_subcommand("coeff", "Fourier coefficient of the orthogonal lift");
    add_common(c_coeff, true);
    c_coeff->add_option("--beta", beta_str, "order-basis coordinates c1,c2,c3,c4 (rationals)")
        ->required();
    auto* c_hecke = app.add_subcommand("hecke", "Hecke data at a prime");
    add_common(c_hecke, true);
    c_hecke->add_option("--p", p_arg, "prime to inspect");
    c_hecke->add_option("--beta", beta_str, "also show the action on this vector");
    auto* c_lfactor = app.add_subcommand("lfactor", "standard local factor and its identities");
    c_lfactor->add_option("--p", p_arg, "prime to expand at");
    c_lfactor->add_flag("--ramified", ramified, "use the level-prime parameters");
    c_lfactor->add_option("--out", out_path, "write JSON here instead of stdout");
    auto* c_eval = app.add_subcommand("eval", "numeric truncated evaluation of the lift");
    add_common(c_eval, false);
    c_eval->add_option("--maass", maass_path, "JSON file with the numeric Maass datum")->required();
    c_eval->add_option("--point", point_str, "evaluation point x1,x2,x3,x4;y");
    c_eval->add_option("--qmax", qmax_str, "truncation norm bound (rational)");
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    add_common(c_verify, false);
    c_verify->add_option("--suite", suite, "order|discform|weil|coeff|hecke|spectra|numeric|"
                                           "cuspidality|all");
    c_verify->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(c_algebra)) {
        emit(cmd_algebra(resolve_order(order_src)), out_path);
    } else if (app.got_subcommand(c_order)) {
        emit(cmd_order(resolve_order(order_src)), out_path);
    } else if (app.got_subcommand(c_disc)) {
        emit(cmd_discform(resolve_order(order_src)), out_path);
    } else if (app.got_subcommand(c_weil)) {
        emit(cmd_weil(resolve_order(order_src), parse_matrix(matrix_str)), out_path);
    } else if (app.got_subcommand(c_lift)) {
        OrderPtr o = resolve_order(order_src);
        emit(cmd_lift(o, parse_al_signs(signs_str, o->disc())), out_path);
    } else if (app.got_subcommand(c_coeff)) {
        OrderPtr o = resolve_order(order_src);
        emit(cmd_coeff(o, beta_str, parse_al_signs(signs_str, o->disc())), out_path);
    } else if (app.got_subcommand(c_hecke)) {
        OrderPtr o = resolve_order(order_src);
        emit(cmd_hecke(o, require_prime(p_arg), parse_al_signs(signs_str, o->disc()), beta_str),
             out_path);
    } else if (app.got_subcommand(c_lfactor)) {
        emit(cmd_lfactor(require_prime(p_arg), ramified), out_path);
    } else if (app.got_subcommand(c_eval)) {
        Rat q_max = parse_rat(qmax_str, "--qmax");
        if (sgn(q_max) <= 0) throw UsageError("--qmax must be positive");
        emit(cmd_eval(resolve_order(order_src), maass_path, parse_point(point_str), q_max),
             out_path);
    } else if (app.got_subcommand(c_verify)) {
        VerifyCtx ctx;
        if (c_verify->count("--order")) ctx.order = resolve_order(order_src);
        ctx.seed = seed;
        Json report = run_suite(suite, ctx);
        emit(report, out_path);
        return report.at("ok").get<bool>() ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "usage"}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
}
