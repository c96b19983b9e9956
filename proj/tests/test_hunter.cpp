#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "trineq/hunter.hpp"

using namespace trineq;

namespace {

HuntConfig planted_config() {
    HuntConfig cfg;
    cfg.inequality_id = kPlantedFalseId;
    cfg.param_grid = {{"s", {2.0}}};
    cfg.dims = {3};
    cfg.restarts = 50;
    cfg.steps_per_restart = 10;
    cfg.seed = 7;
    cfg.ensemble_kind = EnsembleKind::psd;
    return cfg;
}

nlohmann::json strip_wall_time(const HuntRecord& r) {
    nlohmann::json j = r.to_json();
    j.erase("wall_time_s");
    return j;
}

} // namespace

TEST_CASE("planted-false target yields violations quickly") {
    const HuntRecord rec = hunt(planted_config());
    CHECK(rec.violations > 0);
    CHECK(rec.trials <= 50 * 11);
    CHECK(rec.best_report.verdict == Verdict::violated);
    CHECK(rec.best_report.relative_slack < -1e-8);
}

TEST_CASE("proved target yields zero violations") {
    HuntConfig cfg;
    cfg.inequality_id = "updown1";
    cfg.param_grid = {{"r", {0.0, 1.0}}, {"s", {1.0, 1.5}}};
    cfg.dims = {2, 3, 4};
    cfg.restarts = 30;
    cfg.steps_per_restart = 15;
    cfg.seed = 11;
    cfg.ensemble_kind = EnsembleKind::psd;
    const HuntRecord rec = hunt(cfg);
    CHECK(rec.violations == 0);
    CHECK(rec.best_report.relative_slack >= -1e-8);
    CHECK(rec.trials == 30ull * 16ull * 4ull); // (1 + steps) grid evaluations per restart
}

TEST_CASE("hunt is deterministic and worker-count independent") {
    HuntConfig cfg = planted_config();
    cfg.restarts = 12;
    const HuntRecord a = hunt(cfg, 1);
    const HuntRecord b = hunt(cfg, 1);
    CHECK(strip_wall_time(a) == strip_wall_time(b));
    const HuntRecord c = hunt(cfg, 4);
    CHECK(strip_wall_time(a) == strip_wall_time(c));
}

TEST_CASE("per-restart descent objectives are nonincreasing") {
    HuntConfig cfg = planted_config();
    cfg.restarts = 8;
    cfg.steps_per_restart = 25;
    std::map<int, double> last;
    hunt(cfg, 1, [&](int restart, int step, double objective) {
        const auto it = last.find(restart);
        if (it != last.end()) {
            CHECK(objective <= it->second);
            CHECK(step > 0);
        }
        last[restart] = objective;
    });
    CHECK(last.size() == 8);
}

TEST_CASE("replay reproduces the stored evaluation to 1e-12") {
    const HuntRecord rec = hunt(planted_config());
    const InequalityReport rep = replay(rec);
    CHECK(std::abs(rep.lhs - rec.best_report.lhs) <=
          1e-12 * std::max({std::abs(rep.lhs), std::abs(rec.best_report.lhs), 1.0}));
    CHECK(std::abs(rep.rhs - rec.best_report.rhs) <=
          1e-12 * std::max({std::abs(rep.rhs), std::abs(rec.best_report.rhs), 1.0}));
    CHECK(rep.verdict == rec.best_report.verdict);
}

TEST_CASE("replay after a JSON round trip is identical to 1e-12") {
    const HuntRecord rec = hunt(planted_config());
    const HuntRecord back = HuntRecord::from_json(nlohmann::json::parse(rec.to_json().dump()));
    CHECK(strip_wall_time(back) == strip_wall_time(rec));
    const InequalityReport rep = replay(back);
    CHECK(rep.lhs == doctest::Approx(rec.best_report.lhs).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(rec.best_report.rhs).epsilon(1e-12));
}

TEST_CASE("value-perturbed witness re-evaluates without CorruptWitness") {
    HuntRecord rec = hunt(planted_config());
    nlohmann::json& entry = rec.best_report.witness["inputs"]["X"]["entries"][0][0][0];
    entry = entry.get<double>() + 0.125;
    InequalityReport rep;
    CHECK_NOTHROW(rep = replay(rec));
    CHECK(rep.slack != rec.best_report.slack);
}

TEST_CASE("structurally broken witnesses raise CorruptWitness") {
    {
        HuntRecord rec = hunt(planted_config());
        rec.best_report.witness.erase("inputs");
        CHECK_THROWS_AS(replay(rec), CorruptWitness);
    }
    {
        HuntRecord rec = hunt(planted_config());
        rec.best_report.witness["inputs"].erase("Y");
        CHECK_THROWS_AS(replay(rec), CorruptWitness);
    }
    {
        HuntRecord rec = hunt(planted_config());
        rec.best_report.witness["inputs"]["X"]["entries"][0][0] = "text";
        CHECK_THROWS_AS(replay(rec), CorruptWitness);
    }
    {
        HuntRecord rec = hunt(planted_config());
        rec.best_report.witness["inputs"]["X"]["dim"] = 2; // inconsistent with Y
        CHECK_THROWS_AS(replay(rec), CorruptWitness);
    }
}

TEST_CASE("config validation: unknown targets, incompatible ensembles, bad grids") {
    HuntConfig cfg = planted_config();
    cfg.inequality_id = "no_such_thing";
    CHECK_THROWS_AS(hunt(cfg), UnknownInequality);

    cfg = planted_config();
    cfg.inequality_id = "lemma_otherway";
    cfg.param_grid = {{"p", {1.5}}};
    cfg.ensemble_kind = EnsembleKind::psd; // needs dominated_pair
    CHECK_THROWS_AS(hunt(cfg), IncompatibleEnsemble);
    cfg.ensemble_kind = EnsembleKind::dominated_pair;
    CHECK_NOTHROW(cfg.validate());

    cfg = planted_config();
    cfg.param_grid.clear(); // missing required s
    CHECK_THROWS_AS(hunt(cfg), ConfigError);

    cfg = planted_config();
    cfg.param_grid["s"] = {};
    CHECK_THROWS_AS(hunt(cfg), ConfigError);

    cfg = planted_config();
    cfg.shrink_factor = 1.0;
    CHECK_THROWS_AS(hunt(cfg), ConfigError);
}

TEST_CASE("hunt config JSON round trip") {
    const HuntConfig cfg = planted_config();
    const HuntConfig back = HuntConfig::from_json(cfg.to_json());
    CHECK(back.to_json() == cfg.to_json());
}

TEST_CASE("descent on a conjecture target records provenance") {
    HuntConfig cfg;
    cfg.inequality_id = "conjecture1";
    cfg.param_grid = {{"p", {1.1, 1.5, 1.9}}};
    cfg.dims = {2, 3};
    cfg.restarts = 10;
    cfg.steps_per_restart = 12;
    cfg.seed = 13;
    cfg.ensemble_kind = EnsembleKind::general_complex;
    const HuntRecord rec = hunt(cfg);
    CHECK(rec.best_restart < 10);
    CHECK(rec.best_step <= 12);
    CHECK(rec.best_report.witness.contains("ensemble"));
    CHECK(rec.best_report.witness["ensemble"]["stream"].get<int>() ==
          static_cast<int>(rec.best_restart) + 1);
    // Exploration runs on the unrestricted conjecture DO find violating
    // witnesses (the statement only has theorem status on ordered pairs).
    // Whatever is found must replay soundly.
    if (rec.violations > 0) {
        const InequalityReport rep = replay(rec);
        CHECK(rep.verdict == Verdict::violated);
        CHECK(rep.flags.at("evidence_only"));
    }
}
