#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tamesys/cli.hpp"
#include "tamesys/io.hpp"

using namespace tamesys;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/tamesys_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("matrix and tuple round trip through the text format") {
    auto f4 = field_make(2, 2);
    Mat m(f4, 2, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 0; m(1, 1) = 1; m(1, 2) = 1;
    std::ostringstream os;
    write_matrix(os, m);
    std::istringstream is(os.str());
    Mat back = read_matrix(is);
    CHECK(back == m);

    // negative literals reduce into the field
    std::istringstream neg("q=5\n1 -2 1 0\n0 1 -2 1\n");
    Mat ap = read_matrix(neg);
    CHECK(ap(0, 1) == 3);
    CHECK(ap(1, 2) == 3);

    auto f3 = field_make(3);
    std::istringstream ts("n=2\n0 1\n2 2\n1 0\n");
    Tuple t = read_tuple(ts, f3);
    CHECK(t.k() == 3);
    CHECK(t.points[1] == Point{2, 2});
    std::ostringstream to;
    write_tuple(to, t);
    std::istringstream ts2(to.str());
    Tuple t2 = read_tuple(ts2, f3);
    CHECK(t2.points == t.points);

    std::istringstream bad("rows=3\n");
    CHECK_THROWS_AS(read_matrix(bad), ParseError);
}

TEST_CASE("tame-check reports the named verdicts") {
    std::string ap4 = write_temp("ap4.txt", "q=5\n1 -2 1 0\n0 1 -2 1\n");
    RunResult r = run({"tame-check", "--matrix", ap4});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\":\"not-tame\"") != std::string::npos);
    CHECK(r.out.find("\"violating_set\":[]") != std::string::npos);
    CHECK(r.out.find("\"statement\":\"tameness_characterization\"") != std::string::npos);

    std::string cap = write_temp("cap.txt", "q=3\n1 1 1\n");
    r = run({"tame-check", "--matrix", cap});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\":\"tame\"") != std::string::npos);
    CHECK(r.out.find("witnesses") != std::string::npos);
}

TEST_CASE("bounds subcommands emit values in both formats") {
    RunResult r = run({"bounds", "c", "--q", "3", "--delta", "0.3333333"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2.755") != std::string::npos);

    r = run({"bounds", "mono", "--q", "3", "--n", "6", "--d", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "168\n");

    r = run({"bounds", "slice", "--q", "3", "--m", "1", "--k", "3", "--n", "6", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"bound\":\"504\"") != std::string::npos);

    r = run({"bounds", "qbin", "--q", "2", "--n", "4", "--d", "2"});
    CHECK(r.out == "35\n");

    r = run({"bounds", "supersat", "--q", "3", "--r", "2", "--delta", "0.1", "--delta2", "0.01",
             "--n0", "10", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"n1\":100") != std::string::npos);
    CHECK(r.out.find("\"epsilon\":0.12") != std::string::npos);

    r = run({"bounds", "subspace", "--q", "2", "--d", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"C\":8.0") != std::string::npos);
}

TEST_CASE("experiment subcommands") {
    std::string cap = write_temp("cap2.txt", "q=3\n1 1 1\n");

    RunResult r = run({"capfree", "--matrix", cap, "--n", "2", "--mode", "exact"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"size\":4") != std::string::npos);
    CHECK(r.out.find("\"certificate\":\"exhaustive\"") != std::string::npos);

    r = run({"histogram", "--matrix", cap, "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"total\":9") != std::string::npos);

    // point-set input path: {0, 1} admits only the two constant solutions
    std::string small = write_temp("small_set.txt", "n=1\n0\n1\n");
    r = run({"histogram", "--matrix", cap, "--set", small});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"total\":2") != std::string::npos);
    CHECK(r.out.find("\"1\":2") != std::string::npos);

    r = run({"enumerate", "--matrix", cap, "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":9") != std::string::npos);

    r = run({"clp", "--q", "3", "--n", "2", "--d", "2", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ok\":true") != std::string::npos);

    r = run({"replay", "--matrix", cap, "--n", "1", "--r", "1", "--trials", "20", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ok_claim_rank\":true") != std::string::npos);

    std::string tup = write_temp("tup.txt", "n=1\n0\n1\n2\n");
    r = run({"classify", "--matrix", cap, "--tuple", tup});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"is_generic\":true") != std::string::npos);

    r = run({"disjoint-sets", "--matrix", cap, "--tuple", tup});
    CHECK(r.code == 2);  // affine rank 2 exceeds m = 1

    std::string triv = write_temp("triv.txt", "n=1\n1\n1\n1\n");
    r = run({"disjoint-sets", "--matrix", cap, "--tuple", triv});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"r\":1") != std::string::npos);
    CHECK(r.out.find("\"I1\":[") != std::string::npos);

    std::string ones4 = write_temp("ones4.txt", "q=2\n1 1 1 1\n");
    r = run({"extend", "--matrix", ones4});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"gadget\":true") != std::string::npos);
    CHECK(r.out.find("\"result\":{\"m\":4,\"k\":9}") != std::string::npos);

    std::string pset = write_temp("pset.txt", "n=3\n" + [] {
        std::string s;
        for (int c = 0; c < 8; ++c) s += std::to_string(c) + "\n";
        return s;
    }());
    r = run({"subspace-find", "--set", pset, "--q", "2", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"found\":true") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical and usage errors exit 2") {
    std::string cap = write_temp("cap3.txt", "q=3\n1 1 1\n");
    RunResult a = run({"replay", "--matrix", cap, "--n", "2", "--r", "1", "--trials", "5",
                       "--seed", "77"});
    RunResult b = run({"replay", "--matrix", cap, "--n", "2", "--r", "1", "--trials", "5",
                       "--seed", "77"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run({"capfree", "--matrix", cap, "--n", "2", "--mode", "random", "--seed", "4"});
    RunResult d = run({"capfree", "--matrix", cap, "--n", "2", "--mode", "random", "--seed", "4"});
    CHECK(c.out == d.out);

    RunResult bad = run({"tame-check", "--matrix", "/nonexistent/file.txt"});
    CHECK(bad.code == 2);
    bad = run({"bogus-subcommand"});
    CHECK(bad.code == 2);
    bad = run({"bounds", "supersat", "--q", "3", "--r", "2", "--delta", "0.1", "--delta2", "0.5",
               "--n0", "10"});
    CHECK(bad.code == 2);  // delta' >= delta
}

TEST_CASE("every report names the statement it instantiates") {
    std::string cap = write_temp("cap4.txt", "q=3\n1 1 1\n");
    std::string tup = write_temp("tup4.txt", "n=1\n1\n1\n1\n");
    std::string pset = write_temp("pset4.txt", "n=2\n0\n1\n2\n");
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"tame-check", "--matrix", cap},
             {"extend", "--matrix", cap},
             {"classify", "--matrix", cap, "--tuple", tup},
             {"generic-witness", "--matrix", cap},
             {"disjoint-sets", "--matrix", cap, "--tuple", tup},
             {"enumerate", "--matrix", cap, "--n", "1"},
             {"histogram", "--matrix", cap, "--n", "1"},
             {"capfree", "--matrix", cap, "--n", "1", "--mode", "greedy"},
             {"subspace-find", "--set", pset, "--q", "3", "--d", "0"},
             {"clp", "--q", "3", "--n", "1", "--d", "2"},
             {"replay", "--matrix", cap, "--n", "1", "--r", "1", "--trials", "3", "--seed", "1"},
             {"bounds", "mono", "--q", "3", "--n", "2", "--d", "1", "--json"},
             {"bounds", "c", "--q", "3", "--delta", "0.2", "--json"},
             {"bounds", "slice", "--q", "3", "--m", "1", "--k", "3", "--n", "2", "--json"},
             {"bounds", "qbin", "--q", "3", "--n", "4", "--d", "2", "--json"},
             {"bounds", "supersat", "--q", "3", "--r", "1", "--delta", "0.5", "--delta2", "0.1",
              "--n0", "1", "--json"},
             {"bounds", "subspace", "--q", "3", "--d", "2", "--json"},
         }) {
        RunResult r = run(args);
        CHECK(r.code == 0);
        CHECK(r.out.find("\"statement\":\"") != std::string::npos);
    }
}

TEST_CASE("help and point-set round trip") {
    RunResult h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("tame-check") != std::string::npos);

    auto f3 = field_make(3);
    PointSet s(f3, 2);
    s.add(7);
    s.add(2);
    s.add(4);
    std::ostringstream os;
    write_pointset(os, s);
    std::istringstream is(os.str());
    PointSet back = read_pointset(is, f3);
    CHECK(back.codes() == s.codes());
    CHECK(back.n() == 2);
}
