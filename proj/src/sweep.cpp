#include "fracq/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "fracq/errors.hpp"
#include "json.hpp"

namespace fracq {

namespace {

struct GridJob {
    TheoremId theorem;
    std::size_t fi = 0;
    std::size_t di = 0;
    bool has_density = false;
    double alpha = 0.0;
    std::optional<double> p;
};

BoundReport run_job(const GridJob& job, const std::vector<TestFunction>& funcs,
                    const std::vector<Density>& dens, const VerifyOptions& vo) {
    const TestFunction& f = funcs[job.fi];
    auto hp = [&] { return HolderPair(job.p.value_or(2.0)); };
    auto density = [&]() -> const Density& { return dens[job.di]; };
    auto corollary = [&](TheoremId which) {
        const Density* d = job.has_density ? &density() : nullptr;
        for (const auto& r : verify_corollaries(f, hp(), d, vo))
            if (r.theorem == which) return r;
        throw DomainError("corollary report missing");
    };

    switch (job.theorem) {
        case TheoremId::T1_Eq9:
            return verify_t1(f, job.alpha, hp(), vo);
        case TheoremId::T2_Eq7:
            return verify_t2(f, job.alpha, vo);
        case TheoremId::T3_Eq16:
            return verify_t3(f, density(), job.alpha, hp(), vo);
        case TheoremId::T4_Eq14_literal:
            return verify_t4(f, density(), job.alpha, T4Variant::Literal, vo);
        case TheoremId::T4_Eq14_corrected:
            return verify_t4(f, density(), job.alpha, T4Variant::Corrected, vo);
        case TheoremId::C1:
        case TheoremId::C2:
        case TheoremId::C3:
        case TheoremId::C4:
            return corollary(job.theorem);
        case TheoremId::OstrowskiClassical:
            return verify_ostrowski_classical(f, f.domain.b, vo);
    }
    throw DomainError("unknown theorem id");
}

std::vector<GridJob> expand_grid(const SweepConfig& c, std::size_t n_funcs,
                                 std::size_t n_dens) {
    std::vector<GridJob> jobs;
    for (TheoremId th : c.theorems) {
        for (std::size_t fi = 0; fi < n_funcs; ++fi) {
            switch (th) {
                case TheoremId::T1_Eq9:
                    for (double alpha : c.alphas)
                        for (double p : c.ps)
                            jobs.push_back({th, fi, 0, false, alpha, p});
                    break;
                case TheoremId::T2_Eq7:
                    for (double alpha : c.alphas)
                        jobs.push_back({th, fi, 0, false, alpha, std::nullopt});
                    break;
                case TheoremId::T3_Eq16:
                    for (std::size_t di = 0; di < n_dens; ++di)
                        for (double alpha : c.alphas)
                            for (double p : c.ps)
                                jobs.push_back({th, fi, di, true, alpha, p});
                    break;
                case TheoremId::T4_Eq14_literal:
                case TheoremId::T4_Eq14_corrected:
                    for (std::size_t di = 0; di < n_dens; ++di)
                        for (double alpha : c.alphas)
                            jobs.push_back({th, fi, di, true, alpha, std::nullopt});
                    break;
                case TheoremId::C1:
                    for (double p : c.ps)
                        jobs.push_back({th, fi, 0, false, 0.0, p});
                    break;
                case TheoremId::C2:
                    jobs.push_back({th, fi, 0, false, 0.0, std::nullopt});
                    break;
                case TheoremId::C3:
                    for (std::size_t di = 0; di < n_dens; ++di)
                        for (double p : c.ps)
                            jobs.push_back({th, fi, di, true, 0.0, p});
                    break;
                case TheoremId::C4:
                    for (std::size_t di = 0; di < n_dens; ++di)
                        jobs.push_back({th, fi, di, true, 0.0, std::nullopt});
                    break;
                case TheoremId::OstrowskiClassical:
                    jobs.push_back({th, fi, 0, false, 0.0, std::nullopt});
                    break;
            }
        }
    }
    return jobs;
}

} // namespace

SweepConfig default_sweep_config() {
    SweepConfig c;
    for (TheoremId th : all_theorem_ids())
        if (is_sound_variant(th)) c.theorems.push_back(th);
    c.function_ids = function_ids();
    c.density_ids = density_ids();
    c.alphas = {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
    c.ps = {1.25, 2.0, 4.0, 10.0};
    c.interval = Interval(0.0, 1.0);
    c.output_path = "fracq_report.jsonl";
    c.format = ReportFormat::Json;
    return c;
}

SweepConfig parse_sweep_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("config: top level must be an object");

    static const char* known[] = {"theorems",  "function_ids", "density_ids",
                                  "alphas",    "ps",           "interval",
                                  "tol_override", "output_path", "format"};
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw DomainError("config: unknown key '" + key + "'");
    }

    SweepConfig c = default_sweep_config();
    try {
        if (j.contains("theorems")) {
            c.theorems.clear();
            for (const auto& name : j.at("theorems"))
                c.theorems.push_back(theorem_from_string(name.get<std::string>()));
            if (c.theorems.empty()) throw DomainError("config: no theorems selected");
        }
        if (j.contains("function_ids")) {
            c.function_ids = j.at("function_ids").get<std::vector<std::string>>();
            if (c.function_ids.empty())
                throw DomainError("config: no functions selected");
        }
        if (j.contains("density_ids"))
            c.density_ids = j.at("density_ids").get<std::vector<std::string>>();
        if (j.contains("alphas")) {
            c.alphas = j.at("alphas").get<std::vector<double>>();
            for (double a : c.alphas)
                if (!(a >= 0.0) || !std::isfinite(a))
                    throw DomainError("config: alphas must be >= 0");
        }
        if (j.contains("ps")) {
            c.ps = j.at("ps").get<std::vector<double>>();
            for (double p : c.ps)
                if (!(p > 1.0) || !std::isfinite(p))
                    throw DomainError("config: ps must be > 1");
        }
        if (j.contains("interval"))
            c.interval = Interval(j.at("interval").at("a").get<double>(),
                                  j.at("interval").at("b").get<double>());
        if (j.contains("tol_override")) {
            const double tol = j.at("tol_override").get<double>();
            if (!(tol > 0.0) || !std::isfinite(tol))
                throw DomainError("config: tol_override must be > 0");
            c.tol_override = tol;
        }
        if (j.contains("output_path"))
            c.output_path = j.at("output_path").get<std::string>();
        if (j.contains("format")) {
            const std::string fmt = j.at("format").get<std::string>();
            if (fmt == "json")
                c.format = ReportFormat::Json;
            else if (fmt == "csv")
                c.format = ReportFormat::Csv;
            else
                throw DomainError("config: format must be \"json\" or \"csv\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    return c;
}

SweepSummary run_sweep(const SweepConfig& config,
                       std::vector<BoundReport>& reports, int jobs) {
    // Resolving ids up front also validates them.
    std::vector<TestFunction> funcs;
    for (const auto& id : config.function_ids)
        funcs.push_back(lookup_function(id, config.interval));
    std::vector<Density> dens;
    for (const auto& id : config.density_ids)
        dens.push_back(lookup_density(id, config.interval));

    VerifyOptions vo;
    vo.tol = config.tol_override.value_or(kDefaultTol);

    const std::vector<GridJob> grid = expand_grid(config, funcs.size(), dens.size());
    if (grid.empty()) throw DomainError("sweep grid is empty");

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(grid.size()));

    std::vector<std::optional<BoundReport>> slots(grid.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                slots[i] = run_job(grid[i], funcs, dens, vo);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    reports.clear();
    reports.reserve(slots.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    sort_reports(reports);

    SweepSummary summary;
    summary.checks = reports.size();
    for (const auto& r : reports) {
        if (!r.holds) ++summary.violations;
        summary.max_deficit = std::max(summary.max_deficit, std::max(0.0, -r.slack));
    }
    return summary;
}

} // namespace fracq
