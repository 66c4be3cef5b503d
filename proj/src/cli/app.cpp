#include "cli/app.hpp"

#include <CLI11.hpp>

#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "cli/expr.hpp"
#include "ramsum/dseries.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/fourier.hpp"
#include "ramsum/hyperdet.hpp"
#include "ramsum/multisum.hpp"
#include "ramsum/serialize.hpp"

namespace ramsum::cli {

namespace {

enum class Format { automatic, plain, csv, json };

struct SpecArgs {
    std::string fns = "mu,pow:1";
    std::optional<std::string> gammas;

    MultiSumSpec build() const {
        auto fs = parse_fn_list(fns);
        std::vector<std::int64_t> gs =
            gammas ? parse_int_list(*gammas) : std::vector<std::int64_t>(fs.size() - 1, 1);
        return make_spec(std::move(fs), std::move(gs));
    }
};

struct Options {
    Format format = Format::automatic;
    std::uint64_t seed = default_seed;
    SpecArgs spec;
    std::string ns;
    std::string fixed;
    std::string set = "1,2,3";
    std::string as = "1";
    std::optional<std::string> signature;
    std::string kernel = "c";
    std::string f1 = "pow:1", f2 = "one", g1 = "one", g2 = "one";
    std::int64_t bound = 0;
    std::int64_t gamma = 1;
    std::int64_t gamma0 = 1;
    std::int64_t n1 = 12;
    std::int64_t kmax = 10, nmax = 10;
    std::size_t j = 1, m = 1, k = 1, trials = 20;
    std::size_t ceiling = default_slot_ceiling;
    bool diagonal = false;
};

Format resolve(Format requested, Format fallback) { return requested == Format::automatic ? fallback : requested; }

void add_format(CLI::App* sub, Options& o) {
    const std::map<std::string, Format> names{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    sub->add_option("--format", o.format, "Output format: plain, csv or json")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void add_spec(CLI::App* sub, Options& o) {
    sub->add_option("--fns", o.spec.fns, "Function list f_1,..,f_{m+1}")->capture_default_str();
    sub->add_option("--gammas", o.spec.gammas, "Comma-separated gammas; empty for m = 0 (default all 1)");
}

void add_bound(CLI::App* sub, Options& o, std::int64_t fallback) {
    o.bound = fallback;
    sub->add_option("--N", o.bound, "Truncation bound per variable")->check(CLI::PositiveNumber)->capture_default_str();
}

std::string join(std::span<const std::int64_t> xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

int emit_report(const VerificationReport& report, Format format, std::ostream& out) {
    if (resolve(format, Format::json) == Format::plain) {
        out << report.identity << " N=" << report.bound << ": " << (report.ok() ? "ok" : "mismatch");
        if (report.first_mismatch) {
            const auto& mm = *report.first_mismatch;
            out << " at (" << join(mm.index) << ") lhs=" << to_string(mm.lhs) << " rhs=" << to_string(mm.rhs);
        }
        out << "\n";
    } else {
        out << to_json(report).dump(2) << "\n";
    }
    return report.ok() ? exit_ok : exit_mismatch;
}

int emit_pair(const std::string& identity, Json context, const std::pair<Rat, Rat>& sides, Format format,
              std::ostream& out) {
    const bool ok = sides.first == sides.second;
    if (resolve(format, Format::json) == Format::plain) {
        out << identity << ": lhs=" << to_string(sides.first) << " rhs=" << to_string(sides.second) << " "
            << (ok ? "ok" : "mismatch") << "\n";
    } else {
        Json j{{"identity", identity}};
        for (auto it = context.begin(); it != context.end(); ++it) j[it.key()] = it.value();
        j["lhs"] = to_string(sides.first);
        j["rhs"] = to_string(sides.second);
        j["status"] = ok ? "ok" : "mismatch";
        out << j.dump(2) << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

// --- eval ------------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
    const MultiSumSpec spec = o.spec.build();
    const auto ns = parse_int_list(o.ns);
    const Rat value = eval(spec, ns);
    switch (resolve(o.format, Format::plain)) {
    case Format::json:
        out << Json{{"spec", spec.label()}, {"ns", ns}, {"value", to_string(value)}}.dump(2) << "\n";
        break;
    case Format::csv:
        for (std::size_t i = 1; i <= ns.size(); ++i) out << "n" << i << ",";
        out << "value\n" << join(ns) << "," << to_string(value) << "\n";
        break;
    default:
        out << to_string(value) << "\n";
    }
    return exit_ok;
}

// --- verify ----------------------------------------------------------------

VerificationReport fourier_report(const MultiSumSpec& spec, std::int64_t n1) {
    const EvenCoeffTable closed = ffc_of_S(spec, n1);
    const EvenCoeffTable direct = ffc_of_S_direct(spec, n1);
    VerificationReport report{"fourier-theorem", n1, std::nullopt};
    for (const auto& ds : divisor_tuples(closed.moduli, closed.arities)) {
        const Rat a = closed.at(ds);
        const Rat b = direct.at(ds);
        if (a != b) {
            report.first_mismatch = Mismatch{ds, a, b};
            break;
        }
    }
    return report;
}

Signature parse_signature(std::string_view text) {
    Signature out;
    for (auto x : parse_int_list(text)) {
        if (x < 1) throw precondition_error("signature axes are positive");
        out.insert(static_cast<std::size_t>(x));
    }
    return out;
}

Json signature_json(const Signature& s) { return Json(std::vector<std::size_t>(s.begin(), s.end())); }

int cmd_smith(const Options& o, std::ostream& out) {
    const MultiSumSpec spec = o.spec.build();
    const FactorClosedSet s(parse_int_list(o.set));
    std::optional<Signature> signature;
    if (o.signature) signature = parse_signature(*o.signature);
    const auto sides = smith_hyperdet_check(spec, s, signature);
    Json ctx{{"spec", spec.label()}, {"set", s.elements()}, {"signature", signature_json(smith_signature(spec.m()))}};
    return emit_pair("smith", std::move(ctx), sides, o.format, out);
}

int cmd_block_even(const Options& o, std::ostream& out) {
    const FactorClosedSet s(parse_int_list(o.set));
    const std::size_t k = o.k;
    if (k < 1) throw precondition_error("--k must be >= 1");
    BlockEvenFn f;
    if (o.kernel == "c") {
        f = [](std::span<const std::int64_t> r, std::span<const std::int64_t> args) {
            Rat v = 1;
            for (auto n : args) v *= Rat(ramanujan_c(r[0], n));
            return v;
        };
    } else if (o.kernel == "gcd") {
        f = [](std::span<const std::int64_t> r, std::span<const std::int64_t> args) {
            Rat v = 1;
            for (auto n : args) v *= Rat(static_cast<long>(std::gcd(r[0], n)));
            return v;
        };
    } else {
        throw parse_error("unknown kernel '" + o.kernel + "' (expected c or gcd)");
    }
    Signature signature;
    if (o.signature) {
        signature = parse_signature(*o.signature);
    } else {
        for (std::size_t a = 2; a <= k + 1; ++a) signature.insert(a);
        if (k % 2 == 1) signature.insert(1);
    }
    const std::size_t ks[1] = {k};
    const auto sides = even_hyperdet_check(f, ks, s, signature);
    Json ctx{{"kernel", o.kernel}, {"k", k}, {"set", s.elements()}, {"signature", signature_json(signature)}};
    return emit_pair("block-even", std::move(ctx), sides, o.format, out);
}

// Small random rationals p/q with |p| <= 4, 1 <= q <= 3.
class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

    Rat next() {
        const long p = static_cast<long>(below(9)) - 4;
        const long q = static_cast<long>(below(3)) + 1;
        return make_rat(Integer(p), Integer(q));
    }

    Hypermatrix hypermatrix(std::size_t dim, std::size_t order) {
        return Hypermatrix::generate(dim, order, [this](std::span<const std::size_t>) { return next(); });
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{1});
        for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
        return p;
    }

    Signature even_signature(std::size_t dim) {
        while (true) {
            Signature s;
            for (std::size_t a = 1; a <= dim; ++a) {
                if (below(2)) s.insert(a);
            }
            if (s.size() % 2 == 0) return s;
        }
    }

private:
    std::mt19937_64 rng_;
};

int cmd_lemmas(const Options& o, std::ostream& out) {
    RationalSource src(o.seed);
    std::map<std::string, std::size_t> passed, failed;
    auto record = [&](const std::string& name, bool ok) { ++(ok ? passed : failed)[name]; };
    for (std::size_t t = 0; t < o.trials; ++t) {
        const std::size_t dim = 2 + src.below(2);
        const std::size_t n = 2 + src.below(2);
        const Hypermatrix a = src.hypermatrix(dim, n);
        const Signature sig = src.even_signature(dim);
        const Rat det = hyperdet(a, sig);

        record("order-permutation", hyperdet(permute_order(a, src.permutation(n)), sig) == det);
        const auto p = src.permutation(dim);
        record("axis-permutation", hyperdet(permute_axes(a, p), sig) == hyperdet(a, preimage(sig, p)));
        Signature odd = sig;
        if (odd.count(1)) {
            odd.erase(1);
        } else {
            odd.insert(1);
        }
        record("odd-signature", hyperdet(a, odd) == 0);

        // Product lemma with B 2-dimensional: K = {axis} for one axis below
        // dim, L = {2}, so I = K u {dim}.
        const Hypermatrix b = src.hypermatrix(2, n);
        const std::size_t axis = 1 + src.below(dim - 1);
        const Signature a_sig{axis, dim};
        const Signature b_sig{1, 2};
        const Signature ab_sig{axis, dim};
        record("product", hyperdet(cayley_product(a, b), ab_sig) == hyperdet(a, a_sig) * hyperdet(b, b_sig));

        record("determinant", dim != 2 || hyperdet(a, Signature{1, 2}) == matrix_determinant(a));
        record("iterate", iterate_AC(a, b, dim) == iterate_AC_closed(a, b, dim));
    }
    Json checks = Json::object();
    std::set<std::string> names;
    for (const auto& [name, count] : passed) names.insert(name);
    for (const auto& [name, count] : failed) names.insert(name);
    const bool ok = failed.empty();
    for (const auto& name : names) {
        checks[name] = Json{{"passed", passed[name]}, {"failed", failed[name]}};
    }
    if (resolve(o.format, Format::json) == Format::plain) {
        out << "lemmas seed=" << o.seed << " trials=" << o.trials << ": " << (ok ? "ok" : "mismatch") << "\n";
    } else {
        out << Json{{"identity", "lemmas"},
                    {"seed", o.seed},
                    {"trials", o.trials},
                    {"checks", checks},
                    {"status", ok ? "ok" : "mismatch"}}
                   .dump(2)
            << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

// --- table -----------------------------------------------------------------

int cmd_table_c(const Options& o, std::ostream& out) {
    if (o.kmax < 1 || o.nmax < 1) throw precondition_error("--kmax and --nmax must be positive");
    switch (resolve(o.format, Format::plain)) {
    case Format::csv:
        out << "k,n,value\n";
        for (std::int64_t k = 1; k <= o.kmax; ++k) {
            for (std::int64_t n = 1; n <= o.nmax; ++n) out << k << "," << n << "," << ramanujan_c(k, n).get_str() << "\n";
        }
        break;
    case Format::json: {
        Json rows = Json::array();
        for (std::int64_t k = 1; k <= o.kmax; ++k) {
            std::vector<std::string> row;
            for (std::int64_t n = 1; n <= o.nmax; ++n) row.push_back(ramanujan_c(k, n).get_str());
            rows.push_back(row);
        }
        out << Json{{"kmax", o.kmax}, {"nmax", o.nmax}, {"values", rows}}.dump(2) << "\n";
        break;
    }
    default:
        for (std::int64_t k = 1; k <= o.kmax; ++k) {
            for (std::int64_t n = 1; n <= o.nmax; ++n) out << (n > 1 ? " " : "") << ramanujan_c(k, n).get_str();
            out << "\n";
        }
    }
    return exit_ok;
}

int cmd_table_S(const Options& o, std::ostream& out) {
    const MultiSumSpec spec = o.spec.build();
    const TruncatedMDS values = from_multisum(spec, o.nmax, std::nullopt, o.ceiling);
    const std::size_t arity = spec.m() + 1;
    switch (resolve(o.format, Format::csv)) {
    case Format::json: {
        Json rows = Json::array();
        for (std::size_t s = 0; s < values.slot_count(); ++s) {
            rows.push_back(Json{{"n", values.index_of(s)}, {"value", to_string(values.at_slot(s))}});
        }
        out << Json{{"spec", spec.label()}, {"nmax", o.nmax}, {"values", rows}}.dump(2) << "\n";
        break;
    }
    case Format::plain:
        for (std::size_t s = 0; s < values.slot_count(); ++s) {
            out << "S(" << join(values.index_of(s)) << ") = " << to_string(values.at_slot(s)) << "\n";
        }
        break;
    default:
        for (std::size_t i = 1; i <= arity; ++i) out << "n" << i << ",";
        out << "value\n";
        for (std::size_t s = 0; s < values.slot_count(); ++s) {
            out << join(values.index_of(s)) << "," << to_string(values.at_slot(s)) << "\n";
        }
    }
    return exit_ok;
}

int cmd_table_fourier(const Options& o, std::ostream& out) {
    const MultiSumSpec spec = o.spec.build();
    const EvenCoeffTable table = ffc_of_S(spec, o.n1);
    switch (resolve(o.format, Format::json)) {
    case Format::csv:
        for (std::size_t i = 2; i <= spec.m() + 1; ++i) out << "d" << i << ",";
        out << "value\n";
        for (const auto& [ds, value] : table.coeffs) out << join(ds) << "," << to_string(value) << "\n";
        break;
    case Format::plain:
        for (const auto& [ds, value] : table.coeffs) out << "alpha(" << join(ds) << ") = " << to_string(value) << "\n";
        break;
    default:
        out << to_json(table).dump(2) << "\n";
    }
    return exit_ok;
}

int cmd_table_hypermatrix(const Options& o, std::ostream& out) {
    const MultiSumSpec spec = o.spec.build();
    const FactorClosedSet s(parse_int_list(o.set));
    const Hypermatrix a = build_S_hypermatrix(spec, s);
    switch (resolve(o.format, Format::json)) {
    case Format::csv:
        for (std::size_t i = 1; i <= a.dim(); ++i) out << "i" << i << ",";
        out << "value\n";
        for (std::size_t e = 0; e < a.entries().size(); ++e) {
            const auto idx = a.index_of(e);
            for (auto i : idx) out << i << ",";
            out << to_string(a.entries()[e]) << "\n";
        }
        break;
    case Format::plain:
        for (std::size_t e = 0; e < a.entries().size(); ++e) out << (e ? " " : "") << to_string(a.entries()[e]);
        out << "\n";
        break;
    default:
        out << to_json(a).dump(2) << "\n";
    }
    return exit_ok;
}

int cmd_table_closure(const Options& o, std::ostream& out) {
    const auto xs = parse_int_list(o.set);
    const FactorClosedSet closure = factor_closure(xs);
    switch (resolve(o.format, Format::plain)) {
    case Format::json:
        out << Json{{"input", xs}, {"closure", closure.elements()}}.dump(2) << "\n";
        break;
    case Format::csv:
        out << "x\n";
        for (auto x : closure.elements()) out << x << "\n";
        break;
    default:
        out << join(closure.elements()) << "\n";
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Multiple Ramanujan sums: evaluation, identity verification and tables", "ramsum"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate S^{gamma}_f at one argument tuple");
    add_spec(eval_cmd, o);
    eval_cmd->add_option("--ns", o.ns, "Arguments n_1,..,n_{m+1}")->required();
    add_format(eval_cmd, o);

    auto* verify = app.add_subcommand("verify", "Check an identity exactly; exit 1 on mismatch");
    verify->require_subcommand(1);

    auto* v_chain = verify->add_subcommand("gamma-chain", "L(s; chain convolution) = product of L(s; f_j^[g])");
    add_spec(v_chain, o);
    add_bound(v_chain, o, 50);
    add_format(v_chain, o);

    auto* v_multi = verify->add_subcommand("multivariable-L", "Tensor of a_{g0} S against its zeta/L product");
    add_spec(v_multi, o);
    v_multi->add_option("--gamma0", o.gamma0, "Weight gamma_0")->check(CLI::PositiveNumber)->capture_default_str();
    add_bound(v_multi, o, 30);
    add_format(v_multi, o);

    auto* v_phi = verify->add_subcommand("phi-series", "Series in one argument as L(s;f_1) F_1 or zeta(s) S(..F_j)");
    add_spec(v_phi, o);
    v_phi->add_option("--fixed", o.fixed, "The m arguments other than n_j")->required();
    v_phi->add_option("--j", o.j, "Running variable (1-based)")->check(CLI::PositiveNumber)->capture_default_str();
    add_bound(v_phi, o, 40);
    add_format(v_phi, o);

    auto* v_double = verify->add_subcommand("double-series", "Product of two S tensors, cleared denominator");
    v_double->add_option("--f1", o.f1)->capture_default_str();
    v_double->add_option("--f2", o.f2)->capture_default_str();
    v_double->add_option("--g1", o.g1)->capture_default_str();
    v_double->add_option("--g2", o.g2)->capture_default_str();
    v_double->add_option("--gamma", o.gamma)->check(CLI::PositiveNumber)->capture_default_str();
    v_double->add_flag("--diagonal", o.diagonal, "Check the single-variable diagonal form");
    add_bound(v_double, o, 40);
    add_format(v_double, o);

    auto* v_gen = verify->add_subcommand("gen-ramanujan", "Series of c^a_{m+1,k} in its first k arguments");
    v_gen->add_option("--m", o.m)->capture_default_str();
    v_gen->add_option("--k", o.k)->capture_default_str();
    v_gen->add_option("--as", o.as, "Exponents a_1..a_{m+1-k}")->capture_default_str();
    v_gen->add_option("--fixed", o.fixed, "Arguments n_{k+1}..n_{m+1}")->required();
    add_bound(v_gen, o, 20);
    add_format(v_gen, o);

    auto* v_fourier = verify->add_subcommand("fourier-theorem", "Closed-form even coefficients against the definition");
    add_spec(v_fourier, o);
    v_fourier->add_option("--n1", o.n1, "Modulus n_1")->check(CLI::PositiveNumber)->capture_default_str();
    add_format(v_fourier, o);

    auto* v_smith = verify->add_subcommand("smith", "Hyperdeterminant of S over a factor-closed set");
    add_spec(v_smith, o);
    v_smith->add_option("--set", o.set, "Factor-closed set x_1,..,x_n")->capture_default_str();
    v_smith->add_option("--signature", o.signature, "Signature axes (must match the parity rule)");
    add_format(v_smith, o);

    auto* v_block_even = verify->add_subcommand("block-even", "Determinant of a function even mod r against its coefficients");
    v_block_even->add_option("--kernel", o.kernel, "c: prod c(r,n_i); gcd: prod gcd(r,n_i)")->capture_default_str();
    v_block_even->add_option("--k", o.k, "Number of variables")->capture_default_str();
    v_block_even->add_option("--set", o.set, "Factor-closed set")->capture_default_str();
    v_block_even->add_option("--signature", o.signature, "Signature axes (default: smallest even set containing 2..k+1)");
    add_format(v_block_even, o);

    auto* v_lemmas = verify->add_subcommand("lemmas", "Randomized permutation, parity and product lemma checks");
    v_lemmas->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    v_lemmas->add_option("--trials", o.trials)->capture_default_str();
    add_format(v_lemmas, o);

    auto* table = app.add_subcommand("table", "Tabulate values");
    table->require_subcommand(1);

    auto* t_c = table->add_subcommand("c", "Classical Ramanujan sums c(k, n)");
    t_c->add_option("--kmax", o.kmax)->capture_default_str();
    t_c->add_option("--nmax", o.nmax)->capture_default_str();
    add_format(t_c, o);

    auto* t_S = table->add_subcommand("S", "S^{gamma}_f on the grid [1, nmax]^{m+1}");
    add_spec(t_S, o);
    t_S->add_option("--nmax", o.nmax)->check(CLI::PositiveNumber)->capture_default_str();
    t_S->add_option("--ceiling", o.ceiling, "Maximum number of grid points")->capture_default_str();
    add_format(t_S, o);

    auto* t_fourier = table->add_subcommand("fourier", "Even Fourier coefficients of S modulo n_1");
    add_spec(t_fourier, o);
    t_fourier->add_option("--n1", o.n1)->check(CLI::PositiveNumber)->capture_default_str();
    add_format(t_fourier, o);

    auto* t_hyper = table->add_subcommand("hypermatrix", "Hypermatrix S(x_{i_1},..,x_{i_{m+1}})");
    add_spec(t_hyper, o);
    t_hyper->add_option("--set", o.set)->capture_default_str();
    add_format(t_hyper, o);

    auto* t_closure = table->add_subcommand("closure", "Smallest factor-closed superset");
    t_closure->add_option("--set", o.set)->required();
    add_format(t_closure, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(o, out);
        if (v_chain->parsed()) {
            const auto spec = o.spec.build();
            return emit_report(verify_prop_gamma_chain(spec.fns, spec.gammas, o.bound), o.format, out);
        }
        if (v_multi->parsed()) {
            const auto spec = o.spec.build();
            return emit_report(verify_multivariable_L(spec.fns, spec.gammas, o.gamma0, o.bound), o.format, out);
        }
        if (v_phi->parsed()) {
            return emit_report(verify_phi_series(o.spec.build(), parse_int_list(o.fixed), o.j, o.bound), o.format,
                               out);
        }
        if (v_double->parsed()) {
            const auto f1 = parse_fn(o.f1), f2 = parse_fn(o.f2), g1 = parse_fn(o.g1), g2 = parse_fn(o.g2);
            const IdentitySides sides = o.diagonal ? double_series_diagonal_sides(f1, f2, g1, g2, o.gamma, o.bound)
                                                   : double_series_sides(f1, f2, g1, g2, o.gamma, o.bound);
            return emit_report(compare(sides), o.format, out);
        }
        if (v_gen->parsed()) {
            return emit_report(
                verify_gen_ramanujan_series(o.m, o.k, parse_int_list(o.as), parse_int_list(o.fixed), o.bound),
                o.format, out);
        }
        if (v_fourier->parsed()) return emit_report(fourier_report(o.spec.build(), o.n1), o.format, out);
        if (v_smith->parsed()) return cmd_smith(o, out);
        if (v_block_even->parsed()) return cmd_block_even(o, out);
        if (v_lemmas->parsed()) return cmd_lemmas(o, out);
        if (t_c->parsed()) return cmd_table_c(o, out);
        if (t_S->parsed()) return cmd_table_S(o, out);
        if (t_fourier->parsed()) return cmd_table_fourier(o, out);
        if (t_hyper->parsed()) return cmd_table_hypermatrix(o, out);
        if (t_closure->parsed()) return cmd_table_closure(o, out);
    } catch (const arity_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_arity;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    err << "error: no command\n";
    return exit_bad_input;
}

}  // namespace ramsum::cli
