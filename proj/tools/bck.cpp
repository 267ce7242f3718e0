// bck: command-line front end for basecondary functions, secondary fans,
// Morse/Maxwell support functions and tropical Morse classification.

#include "bck/basecondary.hpp"
#include "bck/errors.hpp"
#include "bck/fiber_morse.hpp"
#include "bck/io.hpp"
#include "bck/secondary.hpp"
#include "bck/setfun.hpp"
#include "bck/tropical.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace bck;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 64;

struct Options {
    std::string verb;
    std::string input;
    std::string output;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::string convexifier = "0";
    std::string variant = "morse";
    std::string normalization = "lattice";
    std::string svg;
};

std::uint64_t require_seed(const Options& opt) {
    if (!opt.seed) throw InputError("verb \"" + opt.verb + "\" is randomized and requires --seed");
    return *opt.seed;
}

int samples_or(const Options& opt, int fallback) {
    int s = opt.samples.value_or(fallback);
    if (s < 1) throw InputError("--samples must be >= 1");
    return s;
}

json load_input(const Options& opt) {
    if (opt.input.empty()) throw InputError("--input is required");
    return io::read_json_file(opt.input);
}

SetFunction problem_setfun(const json& problem, const PointConfig& config) {
    if (!problem.contains("F")) throw InputError("missing field \"F\"");
    return io::setfun_from(problem.at("F"), static_cast<int>(config.m()), &config);
}

// Set-function-only problems: the ground set comes from A when present, else
// from "m" (or from the length of neg_gcd labels).
SetFunction standalone_setfun(const json& problem) {
    if (!problem.contains("F")) throw InputError("missing field \"F\"");
    if (problem.contains("A")) {
        PointConfig config = io::config_from(problem);
        return io::setfun_from(problem.at("F"), static_cast<int>(config.m()), &config);
    }
    const json& f = problem.at("F");
    int m = 0;
    if (problem.contains("m"))
        m = problem.at("m").get<int>();
    else if (f.contains("labels"))
        m = static_cast<int>(f.at("labels").size());
    else if (f.contains("columns"))
        m = static_cast<int>(f.at("columns").size());
    else
        throw InputError("cannot determine the ground set: give \"m\" or \"A\"");
    return io::setfun_from(f, m, nullptr);
}

// ---- SVG dumps (best effort) ----

struct Svg {
    std::vector<std::pair<double, double>> polygon;
    std::vector<std::vector<std::pair<double, double>>> polylines;
    std::vector<std::pair<double, double>> dots;

    std::string render() const {
        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        auto widen = [&](double x, double y) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        };
        for (auto [x, y] : polygon) widen(x, y);
        for (const auto& l : polylines)
            for (auto [x, y] : l) widen(x, y);
        for (auto [x, y] : dots) widen(x, y);
        if (xmin > xmax) xmin = xmax = ymin = ymax = 0;
        const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
        const double size = 400, pad = 20, k = (size - 2 * pad) / span;
        auto px = [&](double x) { return pad + (x - xmin) * k; };
        auto py = [&](double y) { return size - pad - (y - ymin) * k; };
        std::ostringstream s;
        s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
        if (!polygon.empty()) {
            s << "<polygon fill=\"#cde\" stroke=\"#124\" points=\"";
            for (auto [x, y] : polygon) s << px(x) << ',' << py(y) << ' ';
            s << "\"/>\n";
        }
        for (const auto& l : polylines) {
            s << "<polyline fill=\"none\" stroke=\"#124\" points=\"";
            for (auto [x, y] : l) s << px(x) << ',' << py(y) << ' ';
            s << "\"/>\n";
        }
        for (auto [x, y] : dots) s << "<circle r=\"3\" fill=\"#a22\" cx=\"" << px(x) << "\" cy=\"" << py(y) << "\"/>\n";
        s << "</svg>\n";
        return s.str();
    }
};

void write_svg(const Options& opt, const std::optional<Svg>& svg) {
    if (opt.svg.empty()) return;
    if (!svg) {
        std::cerr << "bck: --svg is not supported for verb \"" << opt.verb << "\"; ignored\n";
        return;
    }
    std::ofstream out(opt.svg);
    if (!out) {
        std::cerr << "bck: cannot write " << opt.svg << "; SVG skipped\n";
        return;
    }
    out << svg->render();
}

// ---- verbs ----

using Handler = std::function<json(const Options&, std::optional<Svg>&)>;

json verb_eval(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    SetFunction f = problem_setfun(p, config);
    Covector g = io::gamma_from(p, config.m());
    bool generic = is_generic(config, g);
    json out{{"value", io::to_json(eval_basecondary_general(config, f, g))}, {"generic", generic}};
    if (generic) out["value_generic"] = io::to_json(eval_basecondary_generic(config, f, g));
    return out;
}

json verb_eval_terms(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    SetFunction f = problem_setfun(p, config);
    Covector g = io::gamma_from(p, config.m());
    json terms = json::array();
    Rational total = 0;
    for (const auto& t : expansion_terms(config, f, g)) {
        total += t.volume * t.f_difference;
        terms.push_back(json{{"simplex", io::indices_json(t.simplex)},
                             {"before", subset_to_string(t.before)},
                             {"after", subset_to_string(t.after)},
                             {"f_difference", io::to_json(t.f_difference)},
                             {"volume", io::to_json(t.volume)}});
    }
    return json{{"terms", terms}, {"value", io::to_json(total)}};
}

json verb_simplicial(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    Covector g = io::gamma_from(p, config.m());
    json supports = json::array();
    for (const auto& s : enumerate_simplicial(config, g)) {
        json e{{"linear", io::to_json(s.linear)},
               {"max_value", io::to_json(s.max_value)},
               {"maximizers", io::indices_json(s.maximizers)},
               {"generic", s.generic}};
        if (s.generic) e["ordering"] = io::indices_json(order_simplicial(config, g, s).tuple);
        supports.push_back(e);
    }
    return json{{"supports", supports}, {"generic", is_generic(config, g)}};
}

json verb_circuital(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    Covector g = io::gamma_from(p, config.m());
    json supports = json::array();
    for (const auto& c : enumerate_circuital(config, g)) {
        json e{{"linear", io::to_json(c.linear)},
               {"max_value", io::to_json(c.max_value)},
               {"maximizers", io::indices_json(c.maximizers)},
               {"circuit", io::to_json(c.circuit, c.maximizers)}};
        if (config.n >= 1) {
            try {
                e["ordering"] = io::indices_json(order_circuital(config, g, c).tuple);
            } catch (const DomainError& err) {
                e["ordering_error"] = err.what();
            }
        }
        supports.push_back(e);
    }
    return json{{"supports", supports}};
}

json verb_subdivision(const Options& opt, std::optional<Svg>& svg) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    Covector g = io::gamma_from(p, config.m());
    Subdivision s = regular_subdivision(config, g);
    json out = io::to_json(s);
    out["triangulation"] = s.is_triangulation(config.n);
    out["generic"] = is_generic(config, g);
    if (config.n == 1) {
        Svg picture;
        for (std::size_t i = 0; i < config.m(); ++i) picture.dots.push_back({config.points[i][0].get_d(), g[i].get_d()});
        for (const auto& cell : s.cells) {
            std::vector<std::pair<double, double>> line;
            for (Index i : cell) line.push_back({config.points[static_cast<std::size_t>(i)][0].get_d(),
                                                 g[static_cast<std::size_t>(i)].get_d()});
            std::sort(line.begin(), line.end());
            picture.polylines.push_back({line.front(), line.back()});
        }
        svg = picture;
    } else if (config.n == 2) {
        Svg picture;
        for (const auto& pt : config.points) picture.dots.push_back({pt[0].get_d(), pt[1].get_d()});
        for (const auto& cell : s.cells) {
            std::vector<P2> pts;
            for (Index i : cell) pts.push_back({config.points[static_cast<std::size_t>(i)][0],
                                                config.points[static_cast<std::size_t>(i)][1]});
            std::vector<std::pair<double, double>> line;
            for (const auto& v : convex_hull(pts).vertices) line.push_back({v[0].get_d(), v[1].get_d()});
            if (!line.empty()) line.push_back(line.front());
            picture.polylines.push_back(line);
        }
        svg = picture;
    }
    return out;
}

json verb_secondary(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    json out;
    if (p.contains("gamma")) out["support"] = io::to_json(secondary_support(config, io::gamma_from(p, config.m())));
    const bool exact = config.n == 1;
    std::uint64_t seed = exact ? opt.seed.value_or(0) : require_seed(opt);
    json cones = json::array();
    for (const auto& c : secondary_cones(config, samples_or(opt, 2000), seed)) {
        json e = io::to_json(c.subdivision);
        e["gkz"] = io::to_json(gkz_vector(config, c.subdivision));
        e["witness"] = io::to_json(c.witness);
        cones.push_back(e);
    }
    out["exact"] = exact;
    out["triangulations"] = cones;
    return out;
}

json verb_base_polytope(const Options& opt, std::optional<Svg>&) {
    SetFunction f = standalone_setfun(load_input(opt));
    json vertices = json::array();
    for (const auto& v : base_polytope(f)) vertices.push_back(io::to_json(v));
    return json{{"vertices", vertices}};
}

json verb_lovasz(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    SetFunction f = standalone_setfun(p);
    Vec x = io::vec_from(p.contains("x") ? p.at("x") : p.value("gamma", json()), "x");
    return json{{"value", io::to_json(lovasz_extension(f, x))}};
}

json verb_check_submodular(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    SetFunction f = standalone_setfun(p);
    SubmodularityReport r;
    json out;
    if (p.contains("above")) {
        int above = p.at("above").get<int>();
        r = is_submodular_above(f, above);
        out["above"] = above;
    } else {
        r = is_submodular(f);
    }
    out["submodular"] = r.holds;
    if (!r.holds) {
        out["witness"] = json{{"X", subset_to_string(r.x)},
                              {"x1", r.x1 + 1},
                              {"x2", r.x2 + 1},
                              {"F(X+x1)", io::to_json(r.f_x1)},
                              {"F(X+x2)", io::to_json(r.f_x2)},
                              {"F(X)", io::to_json(r.f_x)},
                              {"F(X+x1+x2)", io::to_json(r.f_x12)}};
    }
    return out;
}

json verb_check_circuit_condition(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    SetFunction f = problem_setfun(p, config);
    CircuitConditionReport r = circuit_condition_check(f, config);
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"subset", subset_to_string(e.j)},
                               {"support", subset_to_string(e.support)},
                               {"value", io::to_json(e.value)}});
    return json{{"pass", r.pass}, {"entries", entries}};
}

json verb_convexify(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    SetFunction f = problem_setfun(p, config);
    std::uint64_t seed = config.n == 1 ? opt.seed.value_or(0) : require_seed(opt);
    ConvexifierResult r = min_convexifier(config, f, samples_or(opt, 2000), seed);
    return json{{"convexifier", io::to_json(r.value)}, {"sampled", r.sampled}, {"walls", r.walls}};
}

json verb_polytope(const Options& opt, std::optional<Svg>& svg) {
    json p = load_input(opt);
    PointConfig config = io::config_from(p);
    SetFunction f = problem_setfun(p, config);
    std::uint64_t seed = config.n == 1 ? opt.seed.value_or(0) : require_seed(opt);
    const int samples = samples_or(opt, 2000);
    Rational c = opt.convexifier == "auto" ? min_convexifier(config, f, samples, seed).value
                                           : parse_rational(opt.convexifier);
    PiecewiseLinearRep rep = reconstruct_polytope(config, f, c, samples, seed);
    json out = io::to_json(rep);
    out["convexifier"] = io::to_json(c);
    if (!rep.entries.empty() && rep.entries[0].gradient.size() == 2) {
        std::vector<P2> pts;
        for (const auto& e : rep.entries) pts.push_back({e.gradient[0], e.gradient[1]});
        Svg picture;
        for (const auto& v : convex_hull(pts).vertices) picture.polygon.push_back({v[0].get_d(), v[1].get_d()});
        svg = picture;
    }
    return out;
}

MorseConfig problem_morse(const json& p) {
    json q = p;
    if (!q.contains("n")) q["n"] = 1;
    return make_morse_config(io::config_from(q));
}

json summands_json(const SupportSummands& s, Normalization norm) {
    return json{{"value", io::to_json(s.total)},
                {"normalization", normalization_name(norm)},
                {"summands",
                 json{{"fiber", io::to_json(s.fiber)},
                      {"basecondary", io::to_json(s.basecondary)},
                      {"secondary", io::to_json(s.secondary)}}}};
}

json verb_morse_support(const Options& opt, std::optional<Svg>& svg) {
    json p = load_input(opt);
    MorseConfig mc = problem_morse(p);
    Covector g = io::gamma_from(p, mc.m());
    Normalization norm = parse_normalization(opt.normalization);
    json out = summands_json(morse_summands(mc, g, norm), norm);
    Svg picture;
    for (const auto& v : fiber_polygon_of(build_delta_bar(mc, g)).vertices)
        picture.polygon.push_back({v[0].get_d(), v[1].get_d()});
    svg = picture;
    return out;
}

json verb_maxwell_support(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    MorseConfig mc = problem_morse(p);
    Covector g = io::gamma_from(p, mc.m());
    Normalization norm = parse_normalization(opt.normalization);
    return summands_json(maxwell_summands(mc, g, norm), norm);
}

json verb_morse_polytope(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    MorseConfig mc = problem_morse(p);
    MorseVariant variant = parse_variant(opt.variant);
    Normalization norm = parse_normalization(opt.normalization);
    std::uint64_t seed = require_seed(opt);
    PiecewiseLinearRep rep = morse_polytope(mc, variant, norm, opt.samples.value_or(32), seed);
    json out = io::to_json(rep);
    out["variant"] = variant_name(variant);
    out["normalization"] = normalization_name(norm);
    return out;
}

json verb_trop_morse(const Options& opt, std::optional<Svg>& svg) {
    TropicalPolynomial t = io::tropical_from(load_input(opt));
    MorseReport r = is_morse(t);
    json out = io::to_json(r);
    out["degenerate_root"] = has_degenerate_root(t);
    // envelope over a window around the breakpoints
    Rational lo = r.points.empty() ? Rational(-1) : r.points.front().location - 1;
    Rational hi = r.points.empty() ? Rational(1) : r.points.back().location + 1;
    Svg picture;
    std::vector<std::pair<double, double>> line{{lo.get_d(), t.value(lo).get_d()}};
    for (const auto& cp : r.points) {
        line.push_back({cp.location.get_d(), cp.value.get_d()});
        picture.dots.push_back(line.back());
    }
    line.push_back({hi.get_d(), t.value(hi).get_d()});
    picture.polylines.push_back(line);
    svg = picture;
    return out;
}

json verb_trop_sample(const Options& opt, std::optional<Svg>&) {
    json p = load_input(opt);
    if (!p.contains("support") || !p.at("support").is_array()) throw InputError("missing field \"support\"");
    // only the support matters; validate it through a zero-coefficient polynomial
    json shape_spec{{"support", p.at("support")}, {"coefficients", std::vector<int>(p.at("support").size(), 0)}};
    TropicalPolynomial shape = io::tropical_from(shape_spec);
    long bound = p.contains("bound") ? p.at("bound").get<long>() : 1000;
    SampleReport r = sample_morse_fraction(shape.support, samples_or(opt, 10000), require_seed(opt), bound);
    json witnesses = json::array();
    for (const auto& [c, reason] : r.witnesses)
        witnesses.push_back(json{{"coefficients", io::to_json(c)}, {"reason", reason}});
    return json{{"samples", r.samples},
                {"morse", r.morse},
                {"fraction", io::to_json(r.fraction)},
                {"fraction_decimal", r.fraction.get_d()},
                {"witnesses", witnesses}};
}

const std::map<std::string, Handler>& verbs() {
    static const std::map<std::string, Handler> table{
        {"eval", verb_eval},
        {"eval-terms", verb_eval_terms},
        {"simplicial", verb_simplicial},
        {"circuital", verb_circuital},
        {"subdivision", verb_subdivision},
        {"secondary", verb_secondary},
        {"base-polytope", verb_base_polytope},
        {"lovasz", verb_lovasz},
        {"check-submodular", verb_check_submodular},
        {"check-circuit-condition", verb_check_circuit_condition},
        {"convexify", verb_convexify},
        {"polytope", verb_polytope},
        {"morse-support", verb_morse_support},
        {"maxwell-support", verb_maxwell_support},
        {"morse-polytope", verb_morse_polytope},
        {"trop-morse", verb_trop_morse},
        {"trop-sample", verb_trop_sample},
    };
    return table;
}

std::string usage() {
    std::string s = "usage: bck VERB --input PATH [--output PATH] [--seed N] [--samples N]\n"
                    "           [--convexifier Q|auto] [--variant morse|maxwell]\n"
                    "           [--normalization lattice|euclidean] [--svg PATH]\nverbs:";
    for (const auto& [name, handler] : verbs()) s += " " + name;
    return s + "\n";
}

int emit_error(const char* kind, const std::string& message, int code) {
    json err{{"error", message}, {"kind", kind}};
    std::cout << err.dump() << std::endl;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"basecondary, secondary and Morse support-function toolkit"};
    app.add_option("verb", opt.verb, "command to run")->required();
    app.add_option("--input", opt.input, "problem file (JSON)");
    app.add_option("--output", opt.output, "result file (default: standard output)");
    app.add_option("--seed", opt.seed, "seed for randomized verbs");
    app.add_option("--samples", opt.samples, "number of random samples");
    app.add_option("--convexifier", opt.convexifier, "multiple of the secondary support added (or \"auto\")");
    app.add_option("--variant", opt.variant, "morse|maxwell");
    app.add_option("--normalization", opt.normalization, "lattice|euclidean");
    app.add_option("--svg", opt.svg, "best-effort SVG picture");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help() << usage();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (opt.verb.empty()) {
            std::cerr << usage();
            return kExitUsage;
        }
        return emit_error("input", e.what(), kExitInput);
    }
    auto it = verbs().find(opt.verb);
    if (it == verbs().end()) {
        std::cerr << "bck: unknown verb \"" << opt.verb << "\"\n" << usage();
        return kExitUsage;
    }
    try {
        std::optional<Svg> svg;
        json result = it->second(opt, svg);
        std::string text = result.dump(2) + "\n";
        if (opt.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opt.output);
            if (!out) throw InputError("cannot write output file \"" + opt.output + "\"");
            out << text;
        }
        write_svg(opt, svg);
        return kExitOk;
    } catch (const InputError& e) {
        return emit_error("input", e.what(), kExitInput);
    } catch (const DomainError& e) {
        return emit_error("domain", e.what(), kExitInput);
    } catch (const ResourceError& e) {
        return emit_error("resource", e.what(), kExitInput);
    } catch (const io::json::exception& e) {
        return emit_error("input", e.what(), kExitInput);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), kExitInternal);
    }
}
