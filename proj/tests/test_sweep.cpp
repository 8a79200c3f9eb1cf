#include <sstream>
#include <string>

#include <doctest.h>

#include "tlsflow/sweep.hpp"

using namespace tlsflow;
using doctest::Approx;

namespace {
std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}
}  // namespace

TEST_SUITE("sweep") {
    TEST_CASE("grid parsing") {
        const auto g = sweep::parse_axis("Omega", "1e-4:1e-2:3:log");
        REQUIRE(g.values.size() == 3);
        CHECK(g.is_grid);
        CHECK(g.values[0] == 1e-4);
        CHECK(g.values[1] == Approx(1e-3));
        CHECK(g.values[2] == 1e-2);
        const auto l = sweep::parse_axis("c1", "0:1:5:lin");
        CHECK(l.values[2] == Approx(0.5));
        CHECK(sweep::parse_axis("c1", "0.25").values == std::vector<double>{0.25});
    }

    TEST_CASE("invalid grids name the key") {
        for (const char* text : {"1e-3:1e-2:0:log", "1e-3:1e-2:1:log", "1e-2:1e-3:5:log", "0:1:5:log", "1:2:3:cubic",
                                 "1:2:3", "abc"}) {
            try {
                sweep::parse_axis("Omega", text);
                FAIL("accepted " << text);
            } catch (const sweep::ConfigError& e) {
                CHECK(std::string(e.what()).find("Omega") != std::string::npos);
            }
        }
    }

    TEST_CASE("config file with comments and overrides") {
        const std::string text =
            "# figure parameters\n"
            "approach = ps\n"
            "omega2 = 1.09   # detuned\n"
            "c1 = 1e-4:1e-1:4:log\n"
            "c2_ratio = 2\n";
        const auto cfg = sweep::load_config(text, {"T1=0.3", "threads = 4"});
        CHECK(cfg.approaches.size() == 1);
        CHECK(cfg.approaches[0] == Approach::partial_secular);
        CHECK(cfg.omega2 == 1.09);
        CHECK(cfg.c1.values.size() == 4);
        CHECK(cfg.c2_for(0.01) == Approx(0.02));
        CHECK(cfg.T1 == 0.3);
        CHECK(cfg.threads == 4);
        CHECK(cfg.Omega.values.size() == 64);
    }

    TEST_CASE("config errors") {
        CHECK_THROWS_AS(sweep::load_config("gamma = 1\n", {}), sweep::ConfigError);
        CHECK_THROWS_AS(sweep::load_config("T1 = -1\n", {}), sweep::ConfigError);
        CHECK_THROWS_AS(sweep::load_config("approach = secular\n", {}), sweep::ConfigError);
        CHECK_THROWS_AS(sweep::load_config("no equals sign\n", {}), sweep::ConfigError);
        CHECK_THROWS_AS(sweep::load_config("", {"threads=0"}), sweep::ConfigError);
    }

    TEST_CASE("number formatting round-trips") {
        CHECK(sweep::format_number(0.1) == "0.10000000000000001");
        CHECK(std::stod(sweep::format_number(1.0 / 3.0)) == 1.0 / 3.0);
        CHECK(sweep::format_number(std::nan("")) == "nan");
    }

    TEST_CASE("eigs output shape and degenerate columns") {
        auto cfg = sweep::load_config("", {"Omega=1e-4:1e-1:5:log", "approach=local"});
        std::ostringstream os;
        sweep::run_eigs(cfg, os);
        const std::string out = os.str();
        CHECK(out.rfind("Omega,approach,k,re_lambda,im_lambda\n", 0) == 0);
        CHECK(count_lines(out) == 1 + 5 * 4);
    }

    TEST_CASE("sweep is independent of the thread count") {
        auto cfg = sweep::load_config("", {"Omega=1e-4:1e-1:7:log", "c1=1e-4:1e-1:5:log", "c2_ratio=2",
                                           "omega2=1.09"});
        std::ostringstream one, many;
        sweep::run_sweep(cfg, one);
        cfg.threads = 6;
        sweep::run_sweep(cfg, many);
        CHECK(one.str() == many.str());
        CHECK(count_lines(one.str()) == 1 + 7 * 5 * 3);
    }

    TEST_CASE("sweep marks invalid dressed points as skipped") {
        auto cfg = sweep::load_config("", {"Omega=0.5:1.5:3:lin", "approach=global"});
        std::ostringstream os;
        sweep::run_sweep(cfg, os);
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line);
        std::vector<std::string> rows;
        while (std::getline(is, line)) rows.push_back(line);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].back() == '0');
        CHECK(rows[2].back() == '1');
    }

    TEST_CASE("optimal line at zero detuning") {
        auto cfg = sweep::load_config("", {"approach=local", "Omega=1e-6:0.5:2:log", "c1=1e-3:1e-2:2:log",
                                           "c2_ratio=2"});
        std::ostringstream os;
        sweep::run_optline(cfg, os);
        CHECK(os.str().find("interior") != std::string::npos);
        CHECK(count_lines(os.str()) == 3);
    }

    TEST_CASE("steady needs scalar parameters") {
        auto cfg = sweep::load_config("", {});
        std::ostringstream os;
        CHECK_THROWS_AS(sweep::run_steady(cfg, os), sweep::ConfigError);
        cfg = sweep::load_config("", {"Omega=0.01"});
        sweep::run_steady(cfg, os);
        CHECK(count_lines(os.str()) == 4);
    }
}
