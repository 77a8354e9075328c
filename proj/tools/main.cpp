#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl2/checks.hpp"
#include "sl2/errors.hpp"
#include "sl2/io.hpp"
#include "sl2/multiplier.hpp"
#include "sl2/spectrum.hpp"
#include "sl2/spherical.hpp"
#include "sl2/text.hpp"
#include "sl2/transform.hpp"

namespace {

using namespace sl2;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

/// A command-line option mirrored as a config key.
struct Field {
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
};

struct Command {
    Command(std::string n, CLI::App* a) : name(std::move(n)), app(a) {}

    std::string name;
    CLI::App* app = nullptr;
    std::deque<Field> fields;
    std::string config_path;
    std::string output = "-";

    void add(const std::string& flag, const std::string& key, std::string fallback, const std::string& help) {
        fields.push_back({key, std::move(fallback), nullptr});
        Field& f = fields.back();
        f.option = app->add_option(flag, f.value, help)->capture_default_str();
    }

    void add_common() {
        add("--format", "format", "csv", "csv or json");
        fields.back().option->check(CLI::IsMember({"csv", "json"}));
        app->add_option("--config", config_path, "JSON file with the same keys as the flags (or a previous envelope)");
        app->add_option("--output", output, "output path, - for stdout")->capture_default_str();
    }

    /// Flags given on the command line win over the config file, which wins over defaults.
    Json resolve() const {
        Json file = Json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw DomainError("cannot open config " + config_path);
            try {
                file = Json::parse(in);
            } catch (const Json::exception& e) {
                throw DomainError("config " + config_path + ": " + e.what());
            }
            if (file.contains("config") && file["config"].is_object()) file = file["config"];
            if (!file.is_object()) throw DomainError("config must be a JSON object");
            if (file.contains("command") && file["command"] != name)
                throw DomainError("config is for command " + file["command"].dump() + ", not " + name);
        }
        Json cfg = Json::object();
        cfg["command"] = name;
        for (const Field& f : fields) {
            std::string v = f.value;
            if (f.option->count() == 0 && file.contains(f.key))
                v = file[f.key].is_string() ? file[f.key].get<std::string>() : file[f.key].dump();
            cfg[f.key] = v;
        }
        return cfg;
    }
};

std::string get(const Json& cfg, const std::string& key) { return cfg.at(key).get<std::string>(); }

double real_of(const Json& cfg, const std::string& key) { return parse_real(get(cfg, key)); }

HalfInt half_of(const Json& cfg, const std::string& key) { return HalfInt(real_of(cfg, key)); }

int int_of(const Json& cfg, const std::string& key) {
    double v = real_of(cfg, key);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw DomainError(key + " must be an integer");
    return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string num(double x) { return format_double(x); }

/// "name:key=value,key=value"
std::map<std::string, std::string> spec_args(const std::string& spec, std::string& head) {
    size_t colon = spec.find(':');
    head = spec.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon == std::string::npos) return kv;
    for (const auto& item : split(spec.substr(colon + 1), ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("expected key=value in " + spec);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

std::string render(const Json& cfg, const Table& table, Json results, const Json& margins) {
    std::string hash = config_hash(cfg);
    if (get(cfg, "format") == "json") {
        results["table"] = table_json(table, hash);
        return envelope(cfg, results, margins).dump(2) + "\n";
    }
    std::ostringstream os;
    write_csv(os, table, hash);
    return os.str();
}

/// Runs body(i) for every i in parallel; the first failure in index order is rethrown.
template <class Body>
void parallel_rows(size_t count, Body body) {
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(count); ++i) {
        try {
            body(static_cast<size_t>(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// zeta eval

int cmd_zeta_eval(const Json& cfg, const std::string& output) {
    std::vector<double> ns = parse_range(get(cfg, "n"));
    std::vector<cplx> ss;
    for (const auto& item : split(get(cfg, "s"), ',')) ss.push_back(parse_complex(item));
    std::vector<double> ts = parse_range(get(cfg, "t"));
    Route route = route_from_string(get(cfg, "route"));
    double tol = real_of(cfg, "tol");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");

    struct Row {
        HalfInt n;
        cplx s;
        double t;
        ZetaValue z{};
        double discrepancy = 0.0;
    };
    std::vector<Row> rows;
    for (double n : ns)
        for (cplx s : ss)
            for (double t : ts) rows.push_back({HalfInt(n), s, t});

    const std::vector<Route> all = {Route::Hyper, Route::ThetaIntegral, Route::CosineIntegral, Route::Definition};
    parallel_rows(rows.size(), [&](size_t i) {
        Row& r = rows[i];
        r.z = zeta_eval(r.n, r.s, r.t, route);
        for (Route other : all) {
            if (other == r.z.route) continue;
            try {
                cplx v = zeta_eval(r.n, r.s, r.t, other).value;
                r.discrepancy = std::max(r.discrepancy, std::abs(v - r.z.value));
            } catch (const ConvergenceError&) {
            } catch (const DomainError&) {
            }
        }
    });

    Table table{{"n", "s_re", "s_im", "t", "route", "value_re", "value_im", "error", "discrepancy"}, {}};
    double worst = 0.0;
    for (const Row& r : rows) {
        table.add_row({num(r.n.value()), num(r.s.real()), num(r.s.imag()), num(r.t), to_string(r.z.route),
                       num(r.z.value.real()), num(r.z.value.imag()), num(r.z.error), num(r.discrepancy)});
        worst = std::max(worst, r.discrepancy);
    }
    Json results = Json::object();
    results["max_discrepancy"] = worst;
    Json margins = Json::object();
    margins["discrepancy"] = tol - worst;
    write_text(output, render(cfg, table, results, margins));
    if (worst > tol) {
        std::cerr << "sl2: cross-route discrepancy " << worst << " exceeds " << tol << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// expand

int cmd_expand(Json cfg, const std::string& output) {
    std::string regime = get(cfg, "regime");
    if (regime != "local" && regime != "global") throw DomainError("regime must be local or global");
    if (get(cfg, "t").empty()) cfg["t"] = regime == "global" ? "2,4,8" : "0.05,0.1,0.5";
    std::vector<double> ns = parse_range(get(cfg, "n"));
    std::vector<double> ls = parse_range(get(cfg, "lambda"));
    std::vector<double> ts = parse_range(get(cfg, "t"));
    int K = int_of(cfg, "K");

    struct Row {
        HalfInt n;
        double lambda, t;
        cplx direct{}, expansion{};
        double error = 0.0, estimate = 0.0;
    };
    std::vector<Row> rows;
    for (double n : ns)
        for (double l : ls)
            for (double t : ts) {
                if (regime == "local" && !(t > 0.0 && t <= 1.0)) throw DomainError("local regime needs 0 < t <= 1");
                if (regime == "global" && !(t >= 0.5)) throw DomainError("global regime needs t >= 1/2");
                rows.push_back({HalfInt(n), l, t});
            }

    parallel_rows(rows.size(), [&](size_t i) {
        Row& r = rows[i];
        cplx s(0.5, r.lambda);
        if (regime == "global") {
            r.direct = zeta_eval(r.n, s, r.t, Route::CosineIntegral).value;
            ExpansionValue e = global_expansion(r.n, r.lambda, r.t, K);
            r.expansion = e.value;
            r.estimate = e.error;
        } else {
            r.direct = zeta_eval(r.n, s, r.t).value;
            r.expansion = local_leading(r.n, r.lambda, r.t).leading;
            double nv = r.n.value();
            r.estimate = 0.25 * (1.0 + 2.0 * nv * nv) * r.t * r.t;
        }
        r.error = std::abs(r.direct - r.expansion);
    });

    Table table{{"n", "lambda", "t", "direct_re", "direct_im", "expansion_re", "expansion_im", "abs_error", "estimate"},
                {}};
    double margin = std::numeric_limits<double>::infinity();
    for (const Row& r : rows) {
        table.add_row({num(r.n.value()), num(r.lambda), num(r.t), num(r.direct.real()), num(r.direct.imag()),
                       num(r.expansion.real()), num(r.expansion.imag()), num(r.error), num(r.estimate)});
        margin = std::min(margin, r.estimate - r.error);
    }
    Json margins = Json::object();
    margins["estimate_minus_error"] = rows.empty() ? 0.0 : margin;
    write_text(output, render(cfg, table, Json::object(), margins));
    if (margin < 0.0) {
        std::cerr << "sl2: observed error exceeds the attached estimate\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// transform

KTypeSample read_profile(HalfInt n, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open profile " + path);
    std::vector<double> t;
    std::vector<cplx> v;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
        auto cells = split(line, ',');
        if (cells.size() < 2) throw DomainError("profile rows are t,re[,im]: " + line);
        t.push_back(parse_real(cells[0]));
        v.emplace_back(parse_real(cells[1]), cells.size() > 2 ? parse_real(cells[2]) : 0.0);
    }
    return KTypeSample(n, std::move(t), std::move(v));
}

/// bump:radius=…,center=… | gauss_poly:tmax=… | zero:tmax=… | table:path
KTypeSample make_profile(HalfInt n, const std::string& spec, int points) {
    if (spec.rfind("table:", 0) == 0) return read_profile(n, spec.substr(6));
    std::string head;
    auto kv = spec_args(spec, head);
    auto arg = [&](const std::string& k, double fallback) {
        auto it = kv.find(k);
        return it == kv.end() ? fallback : parse_real(it->second);
    };
    if (points < 2) throw DomainError("points must be at least 2");
    if (head == "bump") {
        double radius = arg("radius", 2.5), center = arg("center", 0.0);
        if (!(radius > 0.0) || center < 0.0) throw DomainError("bump needs radius > 0 and center >= 0");
        std::vector<double> t = uniform_grid(0.0, center + radius, points);
        std::vector<cplx> v(t.size());
        for (size_t i = 0; i < t.size(); ++i) {
            double u = (t[i] - center) / radius;
            v[i] = std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
        }
        return KTypeSample(n, std::move(t), std::move(v));
    }
    if (head == "gauss_poly" || head == "zero") {
        double tmax = arg("tmax", head == "zero" ? 2.5 : 5.0);
        if (!(tmax > 0.0)) throw DomainError("tmax must be positive");
        std::vector<double> t = uniform_grid(0.0, tmax, points);
        std::vector<cplx> v(t.size(), 0.0);
        if (head == "gauss_poly")
            for (size_t i = 0; i < t.size(); ++i) v[i] = std::exp(-t[i] * t[i]) * (1.0 + t[i] * t[i]);
        return KTypeSample(n, std::move(t), std::move(v));
    }
    throw DomainError("unknown profile: " + spec);
}

int cmd_transform(const Json& cfg, const std::string& output) {
    std::string mode = get(cfg, "mode");
    HalfInt n = half_of(cfg, "n");
    KTypeSample f = make_profile(n, get(cfg, "profile"), int_of(cfg, "points"));
    double lambda_max = real_of(cfg, "lambda_max"), step = real_of(cfg, "lambda_step");
    if (!(lambda_max > 0.0) || !(step > 0.0)) throw DomainError("lambda_max and lambda_step must be positive");
    double tol = real_of(cfg, "tol");
    if (!(tol > 0.0)) throw DomainError("tol must be positive");

    TransformData T = forward_transform(f, default_lambda_grid(lambda_max, step));
    Table table{{"grid", "re", "im", "component"}, {}};
    Json results = Json::object();
    Json margins = Json::object();
    results["quadrature_error"] = T.error;
    bool failed = false;

    if (mode == "forward") {
        for (size_t j = 0; j < T.lambda_grid.size(); ++j)
            table.add_row({num(T.lambda_grid[j]), num(T.cont_values[j].real()), num(T.cont_values[j].imag()), "cont"});
        for (const auto& [s, v] : T.disc_values) table.add_row({num(s.value()), num(v.real()), num(v.imag()), "disc"});
    } else if (mode == "inverse" || mode == "roundtrip") {
        KTypeSample g = inverse_transform(T, f.t_grid());
        results["tail_estimate"] = inversion_tail_estimate(T);
        double sup = 0.0;
        for (size_t i = 0; i < f.t_grid().size(); ++i) {
            double t = f.t_grid()[i];
            if (mode == "roundtrip") table.add_row({num(t), num(f.values()[i].real()), num(f.values()[i].imag()), "input"});
            table.add_row({num(t), num(g.values()[i].real()), num(g.values()[i].imag()), "inverse"});
            sup = std::max(sup, std::abs(g.values()[i] - f.values()[i]));
        }
        if (mode == "roundtrip") {
            results["sup_error"] = sup;
            margins["sup_error"] = tol - sup;
            failed = sup > tol;
        }
    } else if (mode == "plancherel") {
        PlancherelSides p = plancherel_sides(f, T);
        table = Table{{"quantity", "value"}, {}};
        table.add_row({"profile_side", num(p.profile_side)});
        table.add_row({"cont_side", num(p.cont_side)});
        table.add_row({"disc_side", num(p.disc_side)});
        table.add_row({"relative_gap", num(p.relative_gap())});
        results["relative_gap"] = p.relative_gap();
        margins["relative_gap"] = tol - p.relative_gap();
        failed = p.relative_gap() > tol;
    } else {
        throw DomainError("mode must be forward, inverse, roundtrip or plancherel");
    }
    write_text(output, render(cfg, table, results, margins));
    if (failed) {
        std::cerr << "sl2: transform " << mode << " exceeds tolerance " << tol << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// kernel

int cmd_kernel(const Json& cfg, const std::string& output, const std::string& report) {
    Multiplier m = Multiplier::parse(get(cfg, "multiplier"));
    HalfInt n = half_of(cfg, "n");
    double p = real_of(cfg, "p");
    double eps = real_of(cfg, "eps");
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must lie in (1, inf)");
    if (eps < 0.0) throw DomainError("eps must be nonnegative");
    KernelSpec spec;
    spec.lambda_max = real_of(cfg, "lambda_max");
    std::vector<double> t = parse_range(get(cfg, "t"));

    MhNormResult mh = mh_norm(m, n, p);
    double disc = discrete_multiplier_sum(m, n);
    KernelTable k = synthesize_kernel(m, n, t, eps, spec);
    HerzResult herz = herz_integral(k, p);

    Table table{{"grid", "re", "im", "component"}, {}};
    const std::pair<const char*, const std::vector<cplx>*> parts[] = {
        {"cont", &k.cont}, {"disc", &k.disc}, {"loc", &k.loc}, {"glo", &k.glo}};
    for (const auto& [tag, values] : parts)
        for (size_t i = 0; i < k.t_grid.size(); ++i)
            table.add_row({num(k.t_grid[i]), num((*values)[i].real()), num((*values)[i].imag()), tag});

    Json results = Json::object();
    results["multiplier"] = m.description();
    results["n"] = n.value();
    results["p"] = p;
    results["epsilon"] = eps;
    results["delta"] = delta_of_p(p);
    results["lambda_max"] = k.lambda_max;
    results["lambda_tail_estimate"] = k.tail_estimate;
    results["mh_norm"] = mh.value;
    results["mh_argmax"] = {mh.argmax.real(), mh.argmax.imag()};
    results["mh_order"] = mh.order;
    results["mh_tail_bound"] = mh.tail_bound;
    results["discrete_sum"] = disc;
    results["herz"] = herz.value;
    results["herz_tail"] = herz.tail;
    Json margins = Json::object();
    margins["lambda_tail"] = spec.tail_tol - k.tail_estimate;

    write_text(output, render(cfg, table, results, margins));
    if (!report.empty()) write_text(report, envelope(cfg, results, margins).dump(2) + "\n");
    return kExitOk;
}

// spectrum

int cmd_spectrum(const Json& cfg, const std::string& output) {
    double p = real_of(cfg, "p");
    HalfInt n = half_of(cfg, "n");
    int points = int_of(cfg, "points");
    double extent = real_of(cfg, "im_extent");
    if (points < 1) throw DomainError("points must be positive");
    if (!(extent > 0.0)) throw DomainError("im_extent must be positive");
    SpectrumRegion r = par_region(p, n);
    std::vector<cplx> pts = boundary_points(r, points, extent);
    size_t curve = pts.size() - r.discrete_points.size();

    Table table{{"re", "im", "component"}, {}};
    double defect = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const char* tag = i >= curve ? "discrete" : (r.delta == 0.0 ? "ray_start" : "parabola");
        if (i < curve && r.delta > 0.0) defect = std::max(defect, parabola_defect(r, pts[i]));
        table.add_row({num(pts[i].real()), num(pts[i].imag()), tag});
    }
    double nv = n.value();
    cplx vertex(nv * nv + 0.25 - r.delta * r.delta, 0.0);
    Json results = Json::object();
    results["delta"] = r.delta;
    results["vertex"] = vertex.real();
    results["vertex_contained"] = contains(r, vertex);
    results["discrete_points"] = r.discrete_points;
    results["max_parabola_defect"] = defect;
    Json margins = Json::object();
    margins["parabola_defect"] = 1e-14 - defect;
    write_text(output, render(cfg, table, results, margins));
    return kExitOk;
}

// check

int cmd_check(const Json& cfg, const std::string& output) {
    CheckOptions opt;
    opt.filter = get(cfg, "filter");
    double seed = real_of(cfg, "seed");
    if (seed < 0.0 || seed != std::floor(seed) || seed > 9.007199254740992e15)
        throw DomainError("seed must be a nonnegative integer");
    opt.seed = static_cast<std::uint64_t>(seed);
    std::string slow = get(cfg, "include_slow");
    if (slow != "true" && slow != "false") throw DomainError("include_slow must be true or false");
    opt.include_slow = slow == "true";
    std::string path = get(cfg, "fixtures");
    Fixtures fx = path.empty() ? default_fixtures() : load_fixtures(path);

    std::vector<CheckResult> results = run_checks(opt, fx);
    if (results.empty()) throw DomainError("filter matches no check: " + opt.filter);
    for (const auto& r : results)
        std::cerr << (r.passed ? "ok   " : "FAIL ") << r.name << "  " << r.measured << " / " << r.threshold << "\n";

    std::string hash = config_hash(cfg);
    std::string text;
    if (get(cfg, "format") == "json") {
        Json rep = check_report(opt, results);
        rep["config"] = cfg;
        for (auto& row : rep["results"]["checks"]) row["config_hash"] = hash;
        text = rep.dump(2) + "\n";
    } else {
        Table table{{"name", "group", "criterion", "passed", "measured", "threshold", "margin", "note"}, {}};
        for (const auto& r : results)
            table.add_row({r.name, r.group, std::to_string(r.criterion), r.passed ? "true" : "false", num(r.measured),
                           num(r.threshold), num(r.threshold - r.measured), r.note});
        std::ostringstream os;
        write_csv(os, table, hash);
        text = os.str();
    }
    write_text(output, text);
    return all_passed(results) ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical analysis of K-central functions on SL(2,R)"};
    app.set_version_flag("--version", std::string(sl2::version()));
    app.require_subcommand(1);

    CLI::App* zeta = app.add_subcommand("zeta", "spherical function evaluation");
    zeta->require_subcommand(1);
    Command zeta_eval{"zeta eval", zeta->add_subcommand("eval", "evaluate zeta_{n,s}(a_t) on a grid")};
    zeta_eval.add("--n", "n", "0", "K-type, half-integer (list or range)");
    zeta_eval.add("--s", "s", "0.5", "spectral parameter(s), comma separated, e.g. 0.5+1i");
    zeta_eval.add("--t", "t", "0:0.5:5", "t grid, start:step:stop or list");
    zeta_eval.add("--route", "route", "auto", "auto, hyper, theta_integral, cosine_integral, definition");
    zeta_eval.add("--tol", "tol", "1e-8", "allowed cross-route discrepancy");
    zeta_eval.add_common();

    Command expand{"expand", app.add_subcommand("expand", "local or global expansion against direct values")};
    expand.add("--regime", "regime", "global", "local or global");
    expand.add("--n", "n", "0", "K-type(s)");
    expand.add("--lambda", "lambda", "1", "lambda values");
    expand.add("--t", "t", "", "t values (default 2,4,8 global; 0.05,0.1,0.5 local)");
    expand.add("--K", "K", "60", "global truncation order");
    expand.add_common();

    Command transform{"transform", app.add_subcommand("transform", "spherical transform of a K-central profile")};
    transform.add("--mode", "mode", "roundtrip", "forward, inverse, roundtrip, plancherel");
    transform.add("--n", "n", "0", "K-type");
    transform.add("--profile", "profile", "bump:radius=2.5", "bump:radius=,center= | gauss_poly:tmax= | zero:tmax= | table:path");
    transform.add("--points", "points", "251", "profile grid points");
    transform.add("--lambda-max", "lambda_max", "60", "lambda truncation");
    transform.add("--lambda-step", "lambda_step", "0.05", "lambda grid step");
    transform.add("--tol", "tol", "1e-3", "round-trip / Plancherel tolerance");
    transform.add_common();

    Command kernel{"kernel", app.add_subcommand("kernel", "kernel synthesis and multiplier diagnostics")};
    std::string report;
    kernel.add("--multiplier", "multiplier", "heat:tau=0.5", "heat:tau= | resolvent:z0= | imagpower:sigma= | const:c= | zero | table:path");
    kernel.add("--n", "n", "0", "K-type");
    kernel.add("--p", "p", "4/3", "exponent in (1, inf), fractions allowed");
    kernel.add("--eps", "eps", "0", "regularization m(z)e^{-eps z}");
    kernel.add("--t", "t", "0:0.025:30", "kernel t grid");
    kernel.add("--lambda-max", "lambda_max", "60", "lambda truncation");
    kernel.add_common();
    kernel.app->add_option("--report", report, "also write the JSON report (without the table) here");

    Command spectrum{"spectrum", app.add_subcommand("spectrum", "boundary of the L^p spectrum region")};
    spectrum.add("--p", "p", "4/3", "exponent in (1, inf)");
    spectrum.add("--n", "n", "0", "K-type");
    spectrum.add("--points", "points", "41", "parabola samples");
    spectrum.add("--im-extent", "im_extent", "2", "largest |Im z| sampled");
    spectrum.add_common();

    Command check{"check", app.add_subcommand("check", "run the invariant suite")};
    check.add("--filter", "filter", "", "group name or check-name prefix");
    check.add("--seed", "seed", "20240917", "random seed");
    check.add("--fixtures", "fixtures", "", "fixture JSON (default: compiled-in copy)");
    check.add("--include-slow", "include_slow", "true", "true or false");
    check.add_common();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "sl2: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (zeta_eval.app->parsed()) return cmd_zeta_eval(zeta_eval.resolve(), zeta_eval.output);
        if (expand.app->parsed()) return cmd_expand(expand.resolve(), expand.output);
        if (transform.app->parsed()) return cmd_transform(transform.resolve(), transform.output);
        if (kernel.app->parsed()) return cmd_kernel(kernel.resolve(), kernel.output, report);
        if (spectrum.app->parsed()) return cmd_spectrum(spectrum.resolve(), spectrum.output);
        if (check.app->parsed()) return cmd_check(check.resolve(), check.output);
    } catch (const sl2::DomainError& e) {
        std::cerr << "sl2: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sl2::NumericalError& e) {
        std::cerr << "sl2: " << e.what() << " (estimate " << e.estimate() << ")\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "sl2: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
