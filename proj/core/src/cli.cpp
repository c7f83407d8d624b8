#include "chow/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>

#include "chow/catalog.hpp"
#include "chow/error.hpp"
#include "chow/report.hpp"
#include "chow/scenario_file.hpp"
#include "chow/scenarios.hpp"

namespace chow {
namespace {

struct Instance {
    std::string id;
    ScenarioParams params;
    std::string file;  // set for scenario-file self-checks
};

std::string registry_listing() {
    std::ostringstream os;
    os << "registered scenarios:\n";
    for (const auto& s : scenario_registry()) {
        os << "  " << s.id;
        for (size_t i = s.id.size(); i < 16; ++i) os << ' ';
        os << s.params << "\n      " << s.anchor << "\n";
    }
    os << "a path to a .scn ring description runs the file self-check instead\n";
    return os.str();
}

Report run_scenario_file(const std::string& path, int dmax, OracleMode mode) {
    Report rep;
    rep.scenario = "scenario-file";
    rep.oracle = to_string(mode);
    rep.params.emplace_back("dmax", dmax);
    ScenarioFile f = load_scenario_file(path);
    RingPresentation pres = presentation_from_scenario_file(f);
    rep.steps.push_back(
        {"file.load", true,
         path + ": " + std::to_string(pres.tab->size()) + " variables, " +
             std::to_string(pres.relations.size()) + " relations, " +
             std::to_string(f.contains.size()) + " membership queries"});

    int window = dmax;
    if (pres.validity_bound && *pres.validity_bound < window) window = *pres.validity_bound;
    int cap = std::max(window, 2);
    for (const auto& r : pres.relations)
        if (!r.is_zero()) cap = std::max(cap, r.degree());
    StrongBasis basis = strong_groebner_basis(pres.ideal(), cap);
    rep.steps.push_back({"basis.verify", verify_strong(basis),
                         "strong basis of " + std::to_string(basis.elems.size()) +
                             " elements at degree cap " + std::to_string(cap) +
                             "; every S- and G-pair re-reduces to zero"});

    {
        bool det = true;
        std::ostringstream w;
        for (int d = 1; d <= window; ++d) {
            GradedGroup g1 = graded_piece_group(pres.tab, pres.relations, d);
            GradedGroup g2 = graded_piece_group(pres.tab, pres.relations, d);
            det = det && g1 == g2;
            w << "d" << d << ": " << g1.to_string() << "; ";
        }
        if (pres.validity_bound) w << "(window clipped to the declared validity bound)";
        rep.steps.push_back({"groups.window", det, w.str()});
    }

    if (!f.contains.empty()) {
        bool all = true;
        std::ostringstream w;
        for (const auto& q : f.contains) {
            Poly p = Poly::parse(pres.tab, q);
            bool in = membership_checked(basis, pres.ideal(), p, mode);
            all = all && in;
            w << q << (in ? " contained; " : " NOT contained; ");
        }
        rep.steps.push_back({"contains.queries", all, w.str()});
    }
    return rep;
}

Report run_instance(const Instance& ins) {
    if (!ins.file.empty())
        return run_scenario_file(ins.file, ins.params.dmax, ins.params.mode);
    return run_scenario(ins.id, ins.params);
}

std::string report_stem(const Report& r, const std::string& file) {
    std::string s = r.scenario;
    if (!file.empty()) {
        std::string base = std::filesystem::path(file).stem().string();
        for (char& ch : base)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '.'))
                ch = '-';
        return s + "-" + base;
    }
    for (const auto& [k, v] : r.params)
        if (k != "dmax") s += "-" + k + std::to_string(v);
    return s;
}

const std::map<std::string, std::pair<std::map<std::string, int>, std::string>>&
catalog_dump_plan() {
    static const std::map<std::string, std::pair<std::map<std::string, int>, std::string>> plan =
        {
            {"ring.BPGL2", {{}, "classifying ring of the rank-2 projective linear group"}},
            {"ring.BG.even", {{}, "classifying ring of the even-genus structure group"}},
            {"ring.BG.odd", {{}, "classifying ring of the odd-genus structure group"}},
            {"ring.P1.PGL2", {{}, "equivariant line under the projective linear group"}},
            {"ring.P1.Godd", {{}, "equivariant line under the odd-genus structure group"}},
            {"ring.P1pow", {{{"m", 3}}, "third power of the equivariant line"}},
            {"ring.PV-torus",
             {{{"m", 2}}, "torus-level projective space of binary forms, truncated"}},
            {"ring.Dab.ambient",
             {{{"a", 2}, {"b", 3}}, "ambient ring of the split locus, both hyperplane classes"}},
        };
    return plan;
}

void dump_catalog(const std::string& dir) {
    for (const auto& id : catalog_presentation_ids()) {
        auto it = catalog_dump_plan().find(id);
        std::map<std::string, int> params;
        std::string anchor = "catalog ring";
        if (it != catalog_dump_plan().end()) {
            params = it->second.first;
            anchor = it->second.second;
        }
        RingPresentation pres = catalog_presentation(id, params);
        ScenarioFile f = scenario_file_from_presentation(pres);
        f.meta.emplace_back("source", id);
        f.meta.emplace_back("anchor", anchor);
        for (const auto& [k, v] : params) f.meta.emplace_back(k, std::to_string(v));
        std::istringstream in(render_scenario_file(f));
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                out << "\n";
            else
                out << line << "  # " << id << ": " << anchor << "\n";
        }
        write_file_atomic(dir + "/catalog/" + id + ".scn", out.str());
    }
}

int list_command(const std::string& emit) {
    std::cout << registry_listing();
    if (!emit.empty()) {
        dump_catalog(emit);
        std::cout << "catalog rings dumped to " << emit << "/catalog\n";
    }
    return 0;
}

std::vector<Report> run_all(const std::vector<Instance>& instances, int jobs) {
    std::vector<Report> reports(instances.size());
    if (jobs <= 1 || instances.size() <= 1) {
        for (size_t i = 0; i < instances.size(); ++i) reports[i] = run_instance(instances[i]);
        return reports;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr eptr;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size() || failed.load()) return;
            try {
                reports[i] = run_instance(instances[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!eptr) eptr = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int width = std::min<int>(jobs, static_cast<int>(instances.size()));
    pool.reserve(static_cast<size_t>(width));
    for (int i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (eptr) std::rethrow_exception(eptr);
    return reports;
}

int cli_run(int argc, char** argv) {
    CLI::App app{"exact verification harness for the catalogued presentations"};
    app.name("verify");

    std::vector<std::string> scen;
    std::optional<int> g, n, a, b;
    int dmax = 8;
    std::string oracle = "both";
    std::string emit;
    bool list = false;
    int jobs = 1;

    app.add_option("--scenario", scen,
                   "scenario id, 'all', or a path to a .scn ring description");
    app.add_option("--g", g, "genus parameter");
    app.add_option("--n", n, "second parameter (the m of single-parameter scenarios)");
    app.add_option("--a", a, "first split-locus parameter");
    app.add_option("--b", b, "second split-locus parameter");
    app.add_option("--dmax", dmax, "degree window for graded comparisons")->check(CLI::Range(1, 64));
    app.add_option("--oracle", oracle, "decision route: groebner, snf, or both")
        ->check(CLI::IsMember({"groebner", "snf", "both"}));
    app.add_option("--emit", emit, "report file (.json/.txt) or output directory");
    app.add_flag("--list", list, "list registered scenarios");
    app.add_option("--jobs", jobs, "parallel scenario instances")->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    bool emit_from_env = false;
    if (emit.empty()) {
        if (const char* env = std::getenv("CHOW_VERIFY_OUT"); env && *env) {
            emit = env;
            emit_from_env = true;
        }
    }

    if (list) return list_command(emit);
    if (scen.empty()) {
        std::cerr << "no scenario selected\n\n" << registry_listing();
        return 2;
    }

    OracleMode mode = oracle_mode_from_string(oracle);
    bool has_params = g || n || a || b;
    ScenarioParams base;
    base.g = g, base.n = n, base.a = a, base.b = b;
    base.dmax = dmax;
    base.mode = mode;

    std::vector<Instance> instances;
    for (const auto& s : scen) {
        if (s == "all") {
            if (has_params)
                throw UsageError(
                    "'--scenario all' runs the default instances; parameter flags are not "
                    "allowed with it");
            for (const auto& info : scenario_registry())
                for (ScenarioParams p : scenario_default_instances(info.id)) {
                    p.dmax = dmax;
                    p.mode = mode;
                    instances.push_back({info.id, p, ""});
                }
        } else if (scenario_registered(s)) {
            if (has_params) {
                instances.push_back({s, base, ""});
            } else {
                for (ScenarioParams p : scenario_default_instances(s)) {
                    p.dmax = dmax;
                    p.mode = mode;
                    instances.push_back({s, p, ""});
                }
            }
        } else if (std::filesystem::exists(s)) {
            instances.push_back({"scenario-file", base, s});
        } else {
            std::cerr << "unknown scenario id: " << s << "\n\n" << registry_listing();
            return 2;
        }
    }

    std::vector<Report> reports = run_all(instances, jobs);

    std::vector<size_t> order(reports.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return std::tie(reports[x].scenario, reports[x].params) <
               std::tie(reports[y].scenario, reports[y].params);
    });

    bool all_pass = true;
    for (size_t i : order) {
        std::cout << report_text(reports[i]);
        all_pass = all_pass && reports[i].pass();
    }
    std::cout << "overall: " << (all_pass ? "pass" : "fail") << " (" << reports.size()
              << " scenario instance" << (reports.size() == 1 ? "" : "s") << ")\n";

    if (!emit.empty()) {
        bool single_file = !emit_from_env && reports.size() == 1 &&
                           (emit.ends_with(".json") || emit.ends_with(".txt"));
        if (single_file) {
            const Report& r = reports[order[0]];
            write_file_atomic(emit, emit.ends_with(".json") ? report_json(r) : report_text(r));
        } else {
            std::map<std::string, int> seen;
            for (size_t i : order) {
                std::string stem = report_stem(reports[i], instances[i].file);
                int k = seen[stem]++;
                if (k > 0) stem += "-" + std::to_string(k + 1);
                write_file_atomic(emit + "/" + stem + ".json", report_json(reports[i]));
                write_file_atomic(emit + "/" + stem + ".txt", report_text(reports[i]));
            }
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
    try {
        return cli_run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EngineInconsistency& e) {
        std::cerr << "engine inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace chow
