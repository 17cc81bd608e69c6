// iacpoly: exact volumes, lattice counts, Ehrhart quasipolynomials and IAC
// voting-event probabilities from the command line.
//
// Exit codes: 0 success, 2 input error, 3 geometric error, 4 budget exceeded.

#include <bit>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iacpoly/ehrhart.hpp"
#include "iacpoly/errors.hpp"
#include "iacpoly/event_spec.hpp"
#include "iacpoly/io.hpp"
#include "iacpoly/output.hpp"
#include "iacpoly/polytope.hpp"
#include "iacpoly/tables.hpp"

namespace {

using namespace iacpoly;

constexpr int kInputError = 2;
constexpr int kGeometryError = 3;
constexpr int kBudgetError = 4;

struct Options {
    std::vector<std::string> polytope_files;
    std::string gf_file;
    bool use_union = false;
    bool all = false;
    unsigned long long n = 0;
    unsigned long long budget = CountOptions{}.budget;
    int table = 0;
    std::string format = "text";
    std::string lambda;
    std::size_t districts = 0;
    std::string event;
};

std::string joined_files(const Options& o) {
    std::string s;
    for (std::size_t i = 0; i < o.polytope_files.size(); ++i) s += (i ? (o.use_union ? " | " : " & ") : "") + o.polytope_files[i];
    return s;
}

/// One file, the union of several (--union, inclusion-exclusion) or their intersection.
EventRegion load_region(const Options& o) {
    if (o.polytope_files.empty()) throw ParseError("--polytope-file is required");
    std::vector<HPolytope> ps;
    for (const auto& f : o.polytope_files) ps.push_back(io::read_hrep_file(f));
    for (const auto& p : ps)
        if (p.dim() != ps.front().dim()) throw DimensionError("polytope files have different dimensions");
    if (!o.use_union) {
        HPolytope p = ps.front();
        for (std::size_t i = 1; i < ps.size(); ++i) p = intersect(p, ps[i]);
        return EventRegion(p);
    }
    if (ps.size() > 16) throw DomainError("--union supports at most 16 files");
    EventRegion r;
    for (unsigned mask = 1; mask < (1u << ps.size()); ++mask) {
        std::optional<HPolytope> p;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (mask & (1u << i)) p = p ? intersect(*p, ps[i]) : ps[i];
        r.terms.push_back({std::popcount(mask) % 2 ? 1 : -1, *p});
    }
    return r;
}

Format format_of(const Options& o) { return parse_format(o.format); }

int cmd_volume(const Options& o) {
    const auto region = load_region(o);
    write_record(std::cout, {"volume", region_volume(region), true, joined_files(o)}, format_of(o));
    return 0;
}

int cmd_vertices(const Options& o) {
    const auto region = load_region(o);
    if (region.terms.size() != 1) throw DomainError("vertices takes a single polytope (no --union)");
    const auto v = enumerate_vertices(region.terms[0].polytope);
    const Format f = format_of(o);
    if (f == Format::json) {
        nlohmann::json j;
        j["count"] = v.vertices.size();
        j["denominator_lcm"] = v.vertices.empty() ? "1" : vertex_denominator_lcm(v).get_str();
        j["vertices"] = nlohmann::json::array();
        for (const auto& x : v.vertices) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& c : x) row.push_back(c.to_string());
            j["vertices"].push_back(row);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices " << v.vertices.size() << '\n';
    std::cout << "denominator_lcm " << (v.vertices.empty() ? BigInt(1) : vertex_denominator_lcm(v)).get_str() << '\n';
    for (const auto& x : v.vertices) {
        for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? " " : "") << x[i];
        std::cout << '\n';
    }
    return 0;
}

int cmd_count(const Options& o) {
    const auto region = load_region(o);
    CountOptions opts;
    opts.budget = o.budget;
    const Format f = format_of(o);
    if (o.all) {
        CountTable t;
        for (unsigned long long k = 0; k <= o.n; ++k) t.set(k, count_lattice_points(region, k, opts));
        std::cout << t.to_csv();
        return 0;
    }
    const BigInt c = count_lattice_points(region, o.n, opts);
    write_record(std::cout, {"count n=" + std::to_string(o.n), Rational(c), true, joined_files(o)}, f);
    return 0;
}

int cmd_ehrhart(const Options& o) {
    const auto region = load_region(o);
    EhrhartOptions opts;
    opts.count.budget = o.budget;
    const auto res = ehrhart_pipeline_detailed(region, opts);
    const auto& q = res.quasipolynomial;
    if (format_of(o) == Format::json) {
        nlohmann::json j;
        j["period"] = q.period;
        j["degree"] = q.degree;
        j["leading_coefficient"] = leading_coefficient(q).to_string();
        j["classes"] = nlohmann::json::array();
        for (const auto& p : q.polys) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& c : p) row.push_back(c.to_string());
            j["classes"].push_back(row);
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "period " << q.period << '\n';
    std::cout << "degree " << q.degree << '\n';
    std::cout << "leading " << leading_coefficient(q) << '\n';
    for (std::size_t r = 0; r < q.polys.size(); ++r) {
        std::cout << "class " << r << ':';
        for (const auto& c : q.polys[r]) std::cout << ' ' << c;
        std::cout << '\n';
    }
    return 0;
}

int cmd_series(const Options& o) {
    if (o.gf_file.empty()) throw ParseError("--gf-file is required");
    const auto t = gf_coefficients(io::read_gf_file(o.gf_file), o.n);
    if (o.all) {
        std::cout << t.to_csv();
        return 0;
    }
    write_record(std::cout, {"coefficient n=" + std::to_string(o.n), Rational(t.at(o.n)), true, o.gf_file},
                 format_of(o));
    return 0;
}

int cmd_table(const Options& o) {
    socialchoice::Table t;
    if (o.table == 2 && !o.lambda.empty())
        t = socialchoice::condorcet_loser_table(Rational::parse(o.lambda));
    else
        t = socialchoice::make_table(o.table);
    write_records(std::cout, t.rows, format_of(o), "Table " + std::to_string(t.number) + ": " + t.title);
    return 0;
}

int cmd_prob(const Options& o) {
    socialchoice::SpecDefaults defaults;
    if (!o.lambda.empty()) defaults.lambda = Rational::parse(o.lambda);
    if (o.districts) defaults.districts = o.districts;
    const auto spec = socialchoice::parse_event_spec(o.event, defaults);
    const std::string canonical = spec.to_string();
    write_record(std::cout, {canonical, socialchoice::evaluate(spec), true, canonical}, format_of(o));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope volumes, lattice counts and IAC voting probabilities"};
    app.require_subcommand(1);
    Options o;

    auto add_files = [&](CLI::App* c, bool with_union) {
        c->add_option("--polytope-file", o.polytope_files, "H-representation file (repeatable)")->required();
        if (with_union) c->add_flag("--union", o.use_union, "combine files by inclusion-exclusion instead of intersecting");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* volume = app.add_subcommand("volume", "exact volume");
    add_files(volume, true);
    add_format(volume);

    auto* vertices = app.add_subcommand("vertices", "vertex list and denominator LCM");
    add_files(vertices, false);
    add_format(vertices);

    auto* count = app.add_subcommand("count", "lattice points in the dilation nP");
    add_files(count, true);
    count->add_option("--n", o.n, "dilation factor")->required();
    count->add_option("--budget", o.budget, "maximum number of enumerated prefixes");
    count->add_flag("--all", o.all, "print the CSV table n,count for 0..n");
    add_format(count);

    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasipolynomial by interpolation");
    add_files(ehrhart, true);
    ehrhart->add_option("--budget", o.budget, "maximum number of enumerated prefixes per dilation");
    add_format(ehrhart);

    auto* series = app.add_subcommand("series", "coefficients of a rational generating function");
    series->add_option("--gf-file", o.gf_file, "JSON {\"num\": [...], \"den\": [...]}")->required();
    series->add_option("--n", o.n, "coefficient index")->required();
    series->add_flag("--all", o.all, "print the CSV table n,count for 0..n");
    add_format(series);

    auto* table = app.add_subcommand("table", "summary tables 1-5");
    table->add_option("--table", o.table, "table number")->required()->check(CLI::Range(1, 5));
    table->add_option("--lambda", o.lambda, "rational weight used for rule M in table 2");
    add_format(table);

    auto* prob = app.add_subcommand("prob", "probability of an event, e.g. manipulable:borda");
    prob->add_option("event", o.event, "event description")->required();
    prob->add_option("--lambda", o.lambda, "scoring weight for events without an explicit rule");
    prob->add_option("--districts", o.districts, "district count for referendum events");
    add_format(prob);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*volume) return cmd_volume(o);
        if (*vertices) return cmd_vertices(o);
        if (*count) return cmd_count(o);
        if (*ehrhart) return cmd_ehrhart(o);
        if (*series) return cmd_series(o);
        if (*table) return cmd_table(o);
        if (*prob) return cmd_prob(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\nrequired dilation: " << e.required_dilation() << '\n';
        return kBudgetError;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << '\n';
        return kGeometryError;
    } catch (const PeriodTooSmall& e) {
        std::cerr << "geometry error: " << e.what() << '\n';
        return kGeometryError;
    } catch (const std::invalid_argument& e) {  // ParseError, DimensionError
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
