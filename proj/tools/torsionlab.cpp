// torsionlab: run verification checks individually or as a suite.
// Exit codes: 0 all pass, 1 verification failure, 2 usage error.

#include <torsionlab/checks.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

using namespace torsionlab;

namespace {

struct SuiteEntry {
    std::string check;
    CheckParams params;
    json params_json;
    json expect;  // subset-matched against the report JSON; empty = status must not be fail
};

// Every key in `expect` must be present and equal in `actual`; objects
// match recursively as subsets.
bool subset_match(const json& expect, const json& actual) {
    if (!expect.is_object()) return expect == actual;
    if (!actual.is_object()) return false;
    for (auto it = expect.begin(); it != expect.end(); ++it) {
        if (!actual.contains(it.key())) return false;
        if (!subset_match(it.value(), actual.at(it.key()))) return false;
    }
    return true;
}

CheckParams params_from_json(const json& j) {
    CheckParams cp;
    auto grab = [&](const char* name, std::optional<long>& slot) {
        if (j.contains(name)) slot = j.at(name).get<long>();
    };
    grab("p", cp.p);
    grab("k", cp.k);
    grab("N", cp.N);
    grab("g", cp.g);
    grab("d", cp.d);
    grab("r", cp.r);
    grab("B", cp.B);
    if (j.contains("seed")) cp.seed = j.at("seed").get<unsigned>();
    return cp;
}

// Expands parameter grids: any array-valued parameter multiplies out.
std::vector<json> expand_grid(const json& params) {
    std::vector<json> out{json::object()};
    for (auto it = params.begin(); it != params.end(); ++it) {
        std::vector<json> values;
        if (it.value().is_array())
            for (const auto& v : it.value()) values.push_back(v);
        else
            values.push_back(it.value());
        std::vector<json> next;
        for (const auto& base : out)
            for (const auto& v : values) {
                json combo = base;
                combo[it.key()] = v;
                next.push_back(std::move(combo));
            }
        out = std::move(next);
    }
    return out;
}

struct SuiteResult {
    VerificationReport report;
    bool ok = true;
    std::string why;
};

SuiteResult run_entry(const SuiteEntry& e) {
    SuiteResult res;
    res.report = run_check(e.check, e.params);
    json rj = res.report.to_json();
    if (!e.expect.empty()) {
        if (!subset_match(e.expect, rj)) {
            res.ok = false;
            res.why = "expectation mismatch: wanted " + e.expect.dump();
        }
    } else if (res.report.status == Status::fail) {
        res.ok = false;
        res.why = "check failed";
    }
    return res;
}

int emit_results(const std::vector<SuiteResult>& results, const std::string& format) {
    long failures = 0;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            json j = r.report.to_json();
            j["ok"] = r.ok;
            if (!r.why.empty()) j["why"] = r.why;
            arr.push_back(std::move(j));
            if (!r.ok) ++failures;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.report.to_text();
            if (!r.why.empty()) std::cout << " [" << r.why << "]";
            std::cout << "\n";
            if (!r.ok) ++failures;
        }
        std::cout << results.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

std::vector<SuiteResult> run_parallel(const std::vector<SuiteEntry>& entries, long jobs) {
    std::vector<SuiteResult> results(entries.size());
    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            results[i] = run_entry(entries[i]);
        }
    };
    if (jobs == 1 || entries.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsionlab: exhaustive verification of the finite computations behind "
                 "torsion bounds for discriminant classes"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list available checks");

    std::string check_id, format = "text", config_path;
    long opt_p = -1, opt_k = -1, opt_N = -1, opt_g = -1, opt_d = -1, opt_r = -1, opt_B = -1;
    long jobs = 1;
    unsigned seed = 12345;

    auto* run_cmd = app.add_subcommand("run", "run a single check");
    run_cmd->add_option("check-id", check_id, "check id (see `torsionlab list`)")->required();
    run_cmd->add_option("--p", opt_p, "prime p (or q for the annihilator check)");
    run_cmd->add_option("--k", opt_k, "coefficient exponent k");
    run_cmd->add_option("--N", opt_N, "period exponent N (or modulus for solver checks)");
    run_cmd->add_option("--g", opt_g, "dimension g");
    run_cmd->add_option("--d", opt_d, "polarization rank d (or form coefficient l)");
    run_cmd->add_option("--r", opt_r, "rank r / r_max");
    run_cmd->add_option("--B", opt_B, "range bound B");
    run_cmd->add_option("--format", format, "output format: text or json");
    run_cmd->add_option("--jobs", jobs, "worker threads (suite mode)");
    run_cmd->add_option("--seed", seed, "seed for randomized spot checks");

    auto* suite_cmd = app.add_subcommand("suite", "run a suite from a config file");
    suite_cmd->add_option("--config", config_path, "suite config (JSON)")->required();
    suite_cmd->add_option("--format", format, "output format: text or json");
    suite_cmd->add_option("--jobs", jobs, "worker threads");
    suite_cmd->add_option("--seed", seed, "seed for randomized spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (format != "text" && format != "json") {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& c : check_registry())
                std::printf("%-22s %s  [%s]\n", c.id.c_str(), c.summary.c_str(), c.params_help.c_str());
            return 0;
        }

        if (run_cmd->parsed()) {
            CheckParams cp;
            cp.seed = seed;
            auto set = [](long v, std::optional<long>& slot) {
                if (v >= 0) slot = v;
            };
            set(opt_p, cp.p);
            set(opt_k, cp.k);
            set(opt_N, cp.N);
            set(opt_g, cp.g);
            set(opt_d, cp.d);
            set(opt_r, cp.r);
            set(opt_B, cp.B);
            VerificationReport rep = run_check(check_id, cp);
            if (format == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_text() << "\n";
            return rep.status == Status::fail ? 1 : 0;
        }

        // suite
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config: " << config_path << "\n";
            return 2;
        }
        json config = json::parse(in);
        std::vector<SuiteEntry> entries;
        for (const auto& item : config.value("checks", json::array())) {
            std::string id = item.at("check").get<std::string>();
            find_check(id);  // validate before running anything
            json grid = item.value("params", json::object());
            for (const auto& combo : expand_grid(grid)) {
                SuiteEntry e;
                e.check = id;
                e.params_json = combo;
                e.params = params_from_json(combo);
                e.params.seed = seed;
                if (combo.contains("seed")) e.params.seed = combo.at("seed").get<unsigned>();
                e.expect = item.value("expect", json::object());
                entries.push_back(std::move(e));
            }
        }
        if (entries.empty()) {
            std::cerr << "warning: empty suite config\n";
            std::cout << "0 checks, 0 failures\n";
            return 0;
        }
        auto results = run_parallel(entries, jobs);
        return emit_results(results, format);
    } catch (const UnknownCheckError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
