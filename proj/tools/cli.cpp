#include "cli.hpp"

#include "hspin/killing.hpp"
#include "hspin/output.hpp"
#include "hspin/verify.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace hspin {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void usage_if(bool bad, const std::string& what) {
    if (bad) throw UsageError(what);
}

BundleDescriptor bundle_for_space(const std::string& space, int n, int j) {
    if (space == "spinor") return spinor_bundle(n, j);
    if (space == "sym") return sym_bundle(n, j);
    if (space == "form") return form_bundle(n, j);
    return spinor_form_bundle(n, j);
}

struct SpectrumArgs {
    std::string space;
    int n = 0, j = 0, k_max = 0;
    int s = -1;
    std::string op;
    std::string curvature = "1";
    bool extrapolate = false;
};

OutputDocument cmd_spectrum(const SpectrumArgs& a) {
    usage_if(a.n < 3, "--n must be at least 3");
    usage_if(a.j < 0 || a.k_max < 0, "--j and --k-max must be nonnegative");
    const bool forms = a.space == "form" || a.space == "spinor-form";
    usage_if(forms && a.j > a.n / 2, "--j must not exceed floor(n/2) for " + a.space);
    usage_if(forms && a.s >= 0, "--s does not apply to " + a.space);
    usage_if(a.s > a.j, "--s must lie in 0..j");

    EvalOptions opt;
    opt.curvature = parse_rational(a.curvature);
    opt.extrapolate_sym_u_n3 = a.extrapolate;
    const auto bundle = bundle_for_space(a.space, a.n, a.j);
    const Family probe = frobenius_decompose(bundle, 0).front().family;

    std::vector<OperatorKind> ops;
    if (!a.op.empty()) {
        const OperatorKind op = parse_op(a.op);
        usage_if(!applicable(op, probe), std::string(op_name(op)) + " does not act on " + a.space);
        ops.push_back(op);
    } else {
        for (OperatorKind op : operators_for(probe)) {
            if (a.space == "sym" && op == OperatorKind::UAdjU && a.n == 3 && !a.extrapolate) continue;
            ops.push_back(op);
        }
    }

    OutputDocument doc;
    doc.command = "spectrum";
    doc.params["family"] = a.space;
    doc.params["n"] = a.n;
    doc.params["j"] = a.j;
    doc.params["k_max"] = a.k_max;
    doc.params["s"] = a.s >= 0 ? Json(a.s) : Json(nullptr);
    doc.params["operator"] = a.op.empty() ? Json(nullptr) : Json(a.op);
    doc.params["curvature"] = rational_json(opt.curvature);
    for (OperatorKind op : ops)
        for (const auto& line : spectrum_table(bundle, op, a.k_max, opt))
            if (a.s < 0 || line.member.s == a.s) doc.lines.push_back(spectrum_line_json(line));
    return doc;
}

struct VerifyArgs {
    std::string suite = "all";
    VerifyGrid grid;
};

OutputDocument cmd_verify(const VerifyArgs& a) {
    usage_if(a.grid.n_min < 3, "--n-min must be at least 3");
    usage_if(a.grid.n_min > a.grid.n_max, "empty grid: --n-min exceeds --n-max");
    usage_if(a.grid.j_max < 0 || a.grid.k_max < 0, "--j-max and --k-max must be nonnegative");
    OutputDocument doc;
    doc.command = "verify";
    doc.params["suite"] = a.suite;
    doc.params["n_min"] = a.grid.n_min;
    doc.params["n_max"] = a.grid.n_max;
    doc.params["j_max"] = a.grid.j_max;
    doc.params["k_max"] = a.grid.k_max;
    doc.params["seed"] = a.grid.seed;
    const std::vector<std::string> suites =
        a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
    std::int64_t checks = 0;
    for (const auto& s : suites) {
        const auto r = run_suite(s, a.grid);
        Json line = Json::object();
        line["suite"] = s;
        line["checks"] = r.checks;
        line["failed"] = r.failed;
        doc.lines.push_back(line);
        checks += r.checks;
        for (const auto& v : r.violations) doc.violations.push_back(s + ": " + v);
        if (r.failed > static_cast<std::int64_t>(r.violations.size()))
            doc.violations.push_back(s + ": " + std::to_string(r.failed - r.violations.size()) +
                                     " further failures not listed");
    }
    doc.checks = checks;
    return doc;
}

IrrepLabel parse_label(int n, const std::string& weight) {
    usage_if(n < 3, "--n must be at least 3");
    return validate_weight(AlgebraDescriptor(n), parse_weight(weight));
}

OutputDocument cmd_dim(int n, const std::string& weight) {
    const auto label = parse_label(n, weight);
    OutputDocument doc;
    doc.command = "dim";
    doc.params["n"] = n;
    doc.params["weight"] = weight_json(label.weight);
    Json line = Json::object();
    line["weight"] = weight_json(label.weight);
    line["dim"] = weyl_dim(label);
    line["casimir"] = rational_json(casimir(label));
    doc.lines.push_back(line);
    return doc;
}

OutputDocument cmd_branch(int n, const std::string& weight) {
    const auto label = parse_label(n, weight);
    usage_if(n < 4, "branching needs --n at least 4");
    OutputDocument doc;
    doc.command = "branch";
    doc.params["n"] = n;
    doc.params["weight"] = weight_json(label.weight);
    doc.params["dim"] = weyl_dim(label);
    std::int64_t total = 0;
    for (const auto& c : branch(label).children) {
        Json line = Json::object();
        line["weight"] = weight_json(c.weight);
        line["dim"] = weyl_dim(c);
        total += weyl_dim(c);
        doc.lines.push_back(line);
    }
    if (total != weyl_dim(label))
        doc.violations.push_back("children dimensions sum to " + std::to_string(total));
    return doc;
}

Json killing_line(const std::string& kind, const Json& i, const Json& degree, const Json& weight,
                  std::int64_t dim) {
    Json line = Json::object();
    line["kind"] = kind;
    line["i"] = i;
    line["degree"] = degree;
    line["weight"] = weight;
    line["dim"] = dim;
    return line;
}

OutputDocument cmd_killing(int n, int degree) {
    usage_if(n < 3, "--n must be at least 3");
    usage_if(degree < 0, "--degree must be nonnegative");
    OutputDocument doc;
    doc.command = "killing";
    doc.params["n"] = n;
    doc.params["degree"] = degree;
    for (const auto& p : primitive_killing(n, degree).primitive_pieces)
        doc.lines.push_back(killing_line("primitive", p.i, degree, weight_json(p.labels.front().weight), p.dim));
    const auto total = killing_space_dim(n, degree);
    for (const auto& [i, dim] : total.graded_pieces)
        doc.lines.push_back(killing_line("graded", i, degree - 2 * i, nullptr, dim));
    doc.lines.push_back(killing_line("total", nullptr, degree, nullptr, total.total_dim));
    if (degree <= n / 2) {
        const auto f = killing_forms(n, degree);
        doc.lines.push_back(killing_line("killing-form", nullptr, degree,
                                         weight_json(f.killing.member.parent_weight), f.killing.dim));
        doc.lines.push_back(killing_line("co-killing-form", nullptr, degree,
                                         weight_json(f.co_killing.member.parent_weight), f.co_killing.dim));
    }
    return doc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra and Weitzenboeck identities on round spheres", "hspin"};
    app.require_subcommand(1);
    std::string format = "json";
    const std::vector<std::string> formats{"json", "csv", "table"};

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table of one bundle family");
    spectrum->add_option("--space", sa.space)->required()->check(CLI::IsMember({"spinor", "sym", "form", "spinor-form"}));
    spectrum->add_option("--n", sa.n, "sphere dimension")->required();
    spectrum->add_option("--j", sa.j)->required();
    spectrum->add_option("--k-max", sa.k_max)->required();
    spectrum->add_option("--op", sa.op, "lap, D2, Tplus, Tminus, U, dstar_d, d_dstar, C");
    spectrum->add_option("--s", sa.s, "restrict to one s (spinor and sym only)");
    spectrum->add_option("--curvature", sa.curvature, "sectional curvature, default 1");
    spectrum->add_flag("--extrapolate-n3", sa.extrapolate, "allow U*U on symmetric tensors at n=3");
    spectrum->add_option("--format", format)->check(CLI::IsMember(formats));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    verify->add_option("--suite", va.suite)
        ->check(CLI::IsMember({"branching", "weitzenboeck", "factorization", "crosscheck", "killing", "all"}));
    verify->add_option("--n-min", va.grid.n_min);
    verify->add_option("--n-max", va.grid.n_max);
    verify->add_option("--j-max", va.grid.j_max);
    verify->add_option("--k-max", va.grid.k_max);
    verify->add_option("--seed", va.grid.seed);
    verify->add_option("--format", format)->check(CLI::IsMember(formats));

    int label_n = 0;
    std::string weight;
    auto* branch_cmd = app.add_subcommand("branch", "so(n) -> so(n-1) branching");
    branch_cmd->add_option("--n", label_n, "the n of so(n)")->required();
    branch_cmd->add_option("--weight", weight, "e.g. 5/2,3/2,1/2")->required();
    branch_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension and Casimir of an so(n) weight");
    dim_cmd->add_option("--n", label_n, "the n of so(n)")->required();
    dim_cmd->add_option("--weight", weight)->required();
    dim_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    int degree = 0;
    auto* killing_cmd = app.add_subcommand("killing", "Killing tensors and Killing forms on S^n");
    killing_cmd->add_option("--n", label_n, "sphere dimension")->required();
    killing_cmd->add_option("--degree", degree)->required();
    killing_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    OutputDocument doc;
    try {
        if (spectrum->parsed()) doc = cmd_spectrum(sa);
        else if (verify->parsed()) doc = cmd_verify(va);
        else if (branch_cmd->parsed()) doc = cmd_branch(label_n, weight);
        else if (dim_cmd->parsed()) doc = cmd_dim(label_n, weight);
        else doc = cmd_killing(label_n, degree);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    out << render(doc, parse_format(format));
    return doc.ok() ? 0 : 1;
}

}  // namespace hspin
