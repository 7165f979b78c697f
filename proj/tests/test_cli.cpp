#include <doctest.h>

#include <fstream>
#include <sstream>

#include "common.hpp"
#include "qks/cli.hpp"
#include "qks/errors.hpp"
#include "qks/json_io.hpp"

using namespace qks;
using namespace qks::testing;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JobSpec job_for(const std::string& spec_path) {
    JobSpec job;
    job.data = CurrentData::build(parse_spec(read_file(spec_path)));
    return job;
}

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_job(const JobSpec& job) {
    std::ostringstream out, err;
    int code = run(job, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spec parsing accepts the running example") {
    CurrentSequence cs = parse_spec(read_file("specs/running_example.json"));
    CHECK(dimension_vector(cs) == std::vector<int>{3, 3});
    CHECK(cs.quiver.arrows.size() == 2);
}

TEST_CASE("spec parsing validates the schema") {
    // non-decreasing mu
    try {
        parse_spec(R"({"vertices":["0"],"arrows":[],"steps":[{"vertex":"0","a":2,"mu":[2,3]}]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.pointer == "/steps/0/mu");
    }
    // mu length must be a
    try {
        parse_spec(R"({"vertices":["0"],"arrows":[],"steps":[{"vertex":"0","a":2,"mu":[2]}]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.pointer == "/steps/0/mu");
    }
    // unknown vertex
    try {
        parse_spec(R"({"vertices":["0"],"arrows":[{"id":"a","tail":"0","head":"9"}]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.pointer == "/arrows/0/head");
    }
    // empty steps are a valid (empty) sequence
    CurrentSequence cs = parse_spec(R"({"vertices":["0"],"arrows":[],"steps":[]})");
    CHECK(cs.steps.empty());
    // reserved arrow names are rejected
    CHECK_THROWS_AS(
        parse_spec(R"({"vertices":["0"],"arrows":[{"id":"q","tail":"0","head":"0"}]})"),
        SchemaError);
}

TEST_CASE("compute command reproduces the regression value") {
    JobSpec job = job_for("specs/two_cycle_deg14.json");
    job.cmd = JobSpec::Cmd::Compute;
    job.lambda = parse_lambda("[[6,3,3,1,1],[]]", 2);
    job.collapse_t = true;
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out == "2*t^6 + 5*t^5 + t^4\n");

    job.method = "kostant";
    CHECK(run_job(job).out == "2*t^6 + 5*t^5 + t^4\n");
    job.method = "catabolism";
    CHECK(run_job(job).out == "2*t^6 + 5*t^5 + t^4\n");
}

TEST_CASE("compute with a lambda of the wrong size prints zero") {
    JobSpec job = job_for("specs/two_cycle_deg14.json");
    job.cmd = JobSpec::Cmd::Compute;
    job.lambda = parse_lambda("[[1],[]]", 2);
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("compute without lambda is a usage error") {
    JobSpec job = job_for("specs/jordan_nullcone.json");
    job.cmd = JobSpec::Cmd::Compute;
    RunResult r = run_job(job);
    CHECK(r.code == 2);
    CHECK(r.err.find("--lambda") != std::string::npos);
}

TEST_CASE("table output is deterministic and byte-identical across runs") {
    JobSpec job = job_for("specs/jordan_column3.json");
    job.cmd = JobSpec::Cmd::Table;
    RunResult a = run_job(job), b = run_job(job);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out ==
          "(1,1,1)\t1\n"
          "(2,1)\tt_00^2 + t_00\n"
          "(3)\tt_00^3\n");
}

TEST_CASE("table totals match the t=1 specialization") {
    JobSpec job = job_for("specs/running_example.json");
    job.cmd = JobSpec::Cmd::Table;
    const CurrentData& data = *job.data;
    TensorSchurElement h = hl_function(data);
    std::map<VarId, LaurentPoly> at_one;
    for (const auto& a : data.cs.quiver.arrows)
        at_one[VarId::arrow(a.id)] = LaurentPoly::one();
    LaurentPoly table_total;
    for (const auto& lam : weight_table(data.flags.nu, data.cs.total_weight_size()))
        table_total += h.coefficient(lam).substitute(at_one);
    LaurentPoly direct_total;
    for (const auto& [lam, c] : h.terms()) direct_total += c.substitute(at_one);
    CHECK(table_total == direct_total);
}

TEST_CASE("json output maps lambda keys to exponent-coefficient objects") {
    JobSpec job = job_for("specs/jordan_column3.json");
    job.cmd = JobSpec::Cmd::Compute;
    job.lambda = parse_lambda("[[2,1]]", 1);
    job.json = true;
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out == "{\"(2,1)\":{\"t_00^2\":\"1\",\"t_00\":\"1\"}}\n");
}

TEST_CASE("shuffle-psi command") {
    JobSpec job = job_for("specs/jordan_nullcone.json");
    job.cmd = JobSpec::Cmd::ShufflePsi;
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out == "t_00 + 1\n");
}

TEST_CASE("compare agrees on randomized instances") {
    JobSpec job;
    job.cmd = JobSpec::Cmd::Compare;
    job.trials = 8;
    job.seed = 7;
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out.find("all methods agree") != std::string::npos);
}

TEST_CASE("compare on a given spec file") {
    JobSpec job = job_for("specs/jordan_column3.json");
    job.cmd = JobSpec::Cmd::Compare;
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out.find("all methods agree") != std::string::npos);
}

TEST_CASE("catabolism command on a branching quiver is a usage error") {
    JobSpec job;
    job.cmd = JobSpec::Cmd::Catabolism;
    CurrentSequence cs = make_cs(
        Quiver{{"0", "1", "2"}, {{"a", 0, 1}, {"b", 0, 2}}}, {{0, 1, {1}}});
    job.data = CurrentData::build(cs);
    job.lambda = parse_lambda("[[1],[],[]]", 3);
    RunResult r = run_job(job);
    CHECK(r.code == 2);
}

TEST_CASE("instance minimizer shrinks to a fixpoint of the predicate") {
    CurrentSequence cs = make_cs(
        cycle2(), {{0, 2, {3, 1}}, {1, 1, {2}}, {0, 2, {2, 2}}, {1, 1, {0}}});
    // pretend the defect is "at least two units of weight at vertex 0"
    auto pred = [](const CurrentSequence& c) {
        int w = 0;
        for (const auto& s : c.steps)
            if (s.vertex == 0) w += s.mu.sum();
        return w >= 2;
    };
    CurrentSequence small = minimize_instance(cs, pred);
    CHECK(pred(small));
    // minimal under the shrink moves: one step, width 1, weight (2)
    CHECK(small.steps.size() == 1);
    CHECK(small.steps[0].vertex == 0);
    CHECK(small.steps[0].width == 1);
    CHECK(small.steps[0].mu.parts == std::vector<int>{2});
}

TEST_CASE("empty step sequences give the unit function") {
    JobSpec job;
    job.data = CurrentData::build(
        parse_spec(R"({"vertices":["0"],"arrows":[],"steps":[]})"));
    job.cmd = JobSpec::Cmd::Table;
    RunResult r = run_job(job);
    CHECK(r.code == 0);
    CHECK(r.out == "()\t1\n");

    job.cmd = JobSpec::Cmd::Compute;
    job.lambda = parse_lambda("[[]]", 1);
    CHECK(run_job(job).out == "1\n");
}

TEST_CASE("spec serialization round-trips") {
    std::string text = read_file("specs/two_cycle_deg14.json");
    CurrentSequence cs = parse_spec(text);
    CurrentSequence again = parse_spec(spec_to_json(cs));
    CHECK(spec_to_json(cs) == spec_to_json(again));
    CHECK(dimension_vector(cs) == dimension_vector(again));
}

TEST_CASE("golden files") {
    struct Golden {
        const char* spec;
        JobSpec::Cmd cmd;
        const char* lambda;
        bool collapse;
        const char* expected;
    };
    std::vector<Golden> cases = {
        {"specs/two_cycle_deg14.json", JobSpec::Cmd::Compute, "[[6,3,3,1,1],[]]",
         true, "tests/golden/deg14_compute.txt"},
        {"specs/two_cycle_deg14.json", JobSpec::Cmd::Compute, "[[6,3,3,1,1],[]]",
         false, "tests/golden/deg14_compute_raw.txt"},
        {"specs/jordan_column3.json", JobSpec::Cmd::Table, nullptr, false,
         "tests/golden/jordan3_table.txt"},
        {"specs/running_example.json", JobSpec::Cmd::Table, nullptr, false,
         "tests/golden/running_table.txt"},
        {"specs/jordan_shift2.json", JobSpec::Cmd::Compute, "[[4]]", false,
         "tests/golden/jordan_shift2_compute.txt"},
        {"specs/jordan_nullcone.json", JobSpec::Cmd::ShufflePsi, nullptr, false,
         "tests/golden/nullcone_psi.txt"},
    };
    for (const auto& c : cases) {
        JobSpec job = job_for(c.spec);
        job.cmd = c.cmd;
        if (c.lambda) job.lambda = parse_lambda(c.lambda, job.data->nvertices());
        job.collapse_t = c.collapse;
        RunResult r = run_job(job);
        CHECK(r.code == 0);
        CHECK_MESSAGE(r.out == read_file(c.expected), "golden mismatch for ",
                      c.expected);
    }
}
