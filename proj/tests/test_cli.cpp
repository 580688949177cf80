#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/cli.hpp"
#include "holo/config.hpp"
#include "holo/error.hpp"
#include "holo/report.hpp"
#include "holo/suite.hpp"

using namespace holo;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv{"holortho"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

ordered_json outputs(const Run& r)
{
    return ordered_json::parse(r.out).at("outputs");
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("holortho-test-" + name)).string();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream(path) << text;
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("config defaults, validation and json")
    {
        RunConfig cfg;
        CHECK(cfg.grid_n == 4096);
        CHECK(cfg.refine_iters == 60);
        CHECK(cfg.norming_eps == 1e-6);
        CHECK(cfg.jgamma_tol == 1e-8);
        CHECK(cfg.orthogonal_margin == 1e-7);
        CHECK(cfg.not_orthogonal_margin == 1e-4);
        CHECK(cfg.quad_n == 4096);
        CHECK(cfg.seed == 42);
        CHECK_NOTHROW(cfg.validate());

        cfg.seed = 0xfedcba9876543210ull;
        cfg.norming_eps = 3.3e-7;
        const RunConfig back = ordered_json(cfg).get<RunConfig>();
        CHECK(ordered_json(back) == ordered_json(cfg));

        RunConfig bad;
        bad.orthogonal_margin = 1e-3;
        CHECK_THROWS_AS(bad.validate(), Error);
        bad = RunConfig{};
        bad.jgamma_tol = 0.0;
        CHECK_THROWS_AS(bad.validate(), Error);

        const std::string path = temp_path("cfg.json");
        write_file(path, R"({"grid_n": 2048, "seed": 7})");
        const RunConfig loaded = load_config(path);
        CHECK(loaded.grid_n == 2048);
        CHECK(loaded.seed == 7);
        CHECK(loaded.quad_n == 4096);
        write_file(path, "{not json");
        CHECK_THROWS_AS(load_config(path), ParseError);
    }

    TEST_CASE("reports round trip losslessly")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"ortho", "z+2", "1", "--curve", "circle(0,1)"},
                 {"norming-set", "z^2+1"},
                 {"fta", "z^3 - 2*z + 5"},
                 {"classify", "blaschke(0.5,1)"}}) {
            const Run r = cli(args);
            REQUIRE(r.code == 0);
            const Report rep = Report::parse(r.out);
            CHECK(rep.dump() + "\n" == r.out);
            CHECK(rep.command == args[0]);
        }
        CHECK_THROWS_AS(Report::parse("{}"), ParseError);
    }

    TEST_CASE("reports are deterministic apart from timing")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"ortho", "z^2", "z^5", "--method", "both"},
                 {"zeros", "z^3 - 2*z + 5", "--curve", "circle(0,8)"},
                 {"norm", "z^3+0.5*z", "--curve", "ellipse(0,2,1)"}}) {
            ordered_json a = ordered_json::parse(cli(args).out), b = ordered_json::parse(cli(args).out);
            a.erase("timing");
            b.erase("timing");
            CHECK(a.dump() == b.dump());
        }
    }

    TEST_CASE("command examples")
    {
        CHECK(std::abs(outputs(cli({"norm", "z^3", "--curve", "circle(0,2)"})).at("norm_value").get<double>() - 8.0) < 1e-12);
        CHECK(outputs(cli({"jgamma", "blaschke(0.5,1)", "--curve", "circle(0,1)"})).at("member") == true);
        CHECK(outputs(cli({"classify", "z+2", "--curve", "circle(0,1)"})).at("smoothness") == "Smooth");

        const ordered_json both = outputs(cli({"ortho", "z^2", "z^5", "--curve", "circle(0,1)", "--method", "both"}));
        CHECK(both.at("minimize").at("verdict") == "Orthogonal");
        CHECK(both.at("covering").at("verdict") == "Orthogonal");
        CHECK(both.at("disagreement") == false);
        CHECK(both.at("covering").at("discrete_mf") == true);

        const ordered_json no = outputs(cli({"ortho", "z+2", "1", "--curve", "circle(0,1)"}));
        CHECK(no.at("verdict") == "NotOrthogonal");
        CHECK(no.at("minimize").at("witness").is_object());
        CHECK(outputs(cli({"ortho", "0", "z"})).at("verdict") == "Orthogonal");
        CHECK(outputs(cli({"ortho", "z+2", "1", "--method", "covering"})).contains("minimize") == false);

        CHECK(outputs(cli({"zeros", "z^3 - 2*z + 5", "--curve", "circle(0,8)"})).at("count") == 3);
        const ordered_json fta = outputs(cli({"fta", "z^3 - 2*z + 5"}));
        CHECK(fta.at("bound") == 7.0);
        CHECK(fta.at("count") == 3);

        const ordered_json cov = outputs(cli({"covering", "1,1", "1,-1"}));
        CHECK(cov.at("covering") == true);
        CHECK(cov.at("pair_criterion") == true);
        CHECK(outputs(cli({"covering", "3,1"})).at("covering") == false);

        const ordered_json ds = outputs(cli({"deriv-scenario", "z^2", "z^2+0.01*z^3", "--n", "2", "--outer", "circle(0,2)",
                                             "--inner", "circle(0,0.5)", "--lambda0", "-1", "--radius", "1"}));
        CHECK(ds.at("hypothesis_holds") == true);
        CHECK(ds.at("decision").at("verdict") == "NotOrthogonal");
    }

    TEST_CASE("landscape csv")
    {
        const Run r = cli({"landscape", "z+2", "1", "--curve", "circle(0,1)", "--box", "-1,1,-1,1", "--res", "11"});
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        CHECK(line == "re_lambda,im_lambda,value");
        int rows = 0;
        double best = HUGE_VAL, best_re = 0.0, best_im = 1.0;
        while (std::getline(in, line)) {
            ++rows;
            double re, im, v;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &re, &im, &v) == 3);
            if (v < best) best = v, best_re = re, best_im = im;
        }
        CHECK(rows == 121);
        CHECK(best_re == -1.0);
        CHECK(best_im == 0.0);
        CHECK(std::abs(best - 2.0) < 1e-12);

        // monomials: the minimum r^n sits at lambda = 0
        const Run m = cli({"landscape", "z^2", "z^3", "--curve", "circle(0,2)", "--box", "-0.5,0.5,-0.5,0.5", "--res", "5"});
        std::istringstream mono(m.out);
        std::getline(mono, line);
        best = HUGE_VAL;
        while (std::getline(mono, line)) {
            double re, im, v;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &re, &im, &v) == 3);
            if (v < best) best = v, best_re = re, best_im = im;
        }
        CHECK(best_re == 0.0);
        CHECK(best_im == 0.0);
        CHECK(std::abs(best - 4.0) < 1e-12);

        const Run one = cli({"landscape", "z+2", "1", "--box", "0,2,-1,3", "--res", "1"});
        double re, im, v;
        REQUIRE(std::sscanf(one.out.c_str(), "re_lambda,im_lambda,value\n%lf,%lf,%lf", &re, &im, &v) == 3);
        CHECK(re == 1.0);
        CHECK(im == 1.0);
        CHECK(std::abs(v - (1.0 + std::sqrt(10.0))) < 1e-12);
        CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 2);
    }

    TEST_CASE("exit codes")
    {
        CHECK(cli({}).code == 2);
        CHECK(cli({"bogus"}).code == 2);
        CHECK(cli({"norm", "z^", "--curve", "circle(0,1)"}).code == 2);
        CHECK(cli({"norm", "z", "--curve", "circle(0"}).code == 2);
        CHECK(cli({"ortho", "z", "1", "--method", "guess"}).code == 2);
        CHECK(cli({"norm", "z", "--curve", "circle(0,-1)"}).code == 3);
        const Run zoc = cli({"zeros", "z*(z-1)", "--curve", "circle(0,1)"});
        CHECK(zoc.code == 3);
        CHECK(zoc.err.find("ZeroOnCurve") != std::string::npos);
        CHECK(cli({"norm", "1/(z-1)"}).code == 3);
        CHECK(cli({"fta", "1/z"}).code == 3);
        CHECK(cli({"fta", "0"}).code == 3);
        CHECK(cli({"deriv-scenario", "z^2", "z^3", "--n", "2", "--outer", "circle(0,2)", "--inner", "circle(0,0.5)",
                   "--radius", "1.5"}).code == 3);
        CHECK(cli({"verify-paper", "--only", "nonsense"}).code == 3);
        CHECK(cli({"norm", "z", "--config", temp_path("missing.json")}).code == 3);
        const std::string bad = temp_path("bad.json");
        write_file(bad, "[1,");
        CHECK(cli({"norm", "z", "--config", bad}).code == 2);
        CHECK(cli({"--help"}).code == 0);
    }

    TEST_CASE("out flag writes the report")
    {
        const std::string path = temp_path("out.json");
        std::filesystem::remove(path);
        const Run r = cli({"norm", "z+2", "--out", path});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        const ordered_json j = ordered_json::parse(in);
        CHECK(j.at("command") == "norm");
        CHECK(std::abs(j.at("outputs").at("norm_value").get<double>() - 3.0) < 1e-12);
    }

    TEST_CASE("suite filtering and broken configurations")
    {
        const Run fta = cli({"verify-paper", "--only", "fta"});
        CHECK(fta.code == 0);
        CHECK(fta.out.find("fta") != std::string::npos);
        CHECK(fta.out.find("cauchy") == std::string::npos);
        CHECK(fta.out.find("overall: PASS") != std::string::npos);

        const SuiteResult two = verify_paper(RunConfig{}, {"deriv-scenario", "converse-example"}, 2);
        REQUIRE(two.blocks.size() == 2);
        CHECK(two.blocks[0].name == "deriv-scenario");
        CHECK(two.passed());

        const std::string path = temp_path("q8.json");
        write_file(path, R"({"quad_n": 8})");
        const Run broken = cli({"verify-paper", "--config", path, "--only", "cauchy"});
        CHECK(broken.code == 5);
        CHECK(broken.out.find("FAIL") != std::string::npos);
    }

    TEST_CASE("suite reports are reproducible")
    {
        RunConfig cfg;
        cfg.seed = 99;
        const SuiteResult a = verify_paper(cfg, {"covering", "jgamma-zeros"}, 1);
        const SuiteResult b = verify_paper(cfg, {"covering", "jgamma-zeros"}, 2);
        CHECK(format_table(a) == format_table(b));
        CHECK(a.passed());
    }
}
