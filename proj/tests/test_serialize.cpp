#include "hopfwave/serialize.hpp"
#include "hopfwave/ket.hpp"

#include <doctest.h>

using namespace hopfwave;

TEST_CASE("term-list json round structure") {
    Polynomial p = GaussianRational(2) * (z1() * z2b()) +
                   GaussianRational{make_rational(-1, 3), Rational(1)} *
                       Polynomial::monomial(Monomial(0, 0, 2, 0));
    Json j = term_list_json(p);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["exp"] == Json::array({0, 0, 2, 0}));
    CHECK(j[0]["re"] == "-1/3");
    CHECK(j[0]["im"] == "1");
    CHECK(j[1]["exp"] == Json::array({1, 0, 0, 1}));
    CHECK(j[1]["re"] == "2");
    CHECK(j[1]["im"] == "0");
}

TEST_CASE("multiplet exports") {
    Multiplet m = make_multiplet(HalfInt::whole(1));
    Json j = multiplet_json(m, true);
    CHECK(j["j"] == "1");
    REQUIRE(j["kets"].size() == 3);
    CHECK(j["kets"][0]["m"] == "1"); // descending m
    CHECK(j["kets"][2]["m"] == "-1");
    CHECK(j["kets"][1]["norm_factor"] == "sqrt(2)");
    CHECK(j["kets"][1]["normalized_prefactor"] == "1/2*sqrt(2)");

    std::string csv = multiplet_csv(m);
    CHECK(csv.find("j,m,a,b,c,d,coeff_re,coeff_im,norm_factor") == 0);
    CHECK(csv.find("1,-1,0,1,1,0,1,0,1") != std::string::npos);

    std::string latex = multiplet_latex(m, true);
    CHECK(latex.find("\\rangle") != std::string::npos);
    CHECK(latex.find("\\cos") != std::string::npos);
}

TEST_CASE("euler-form latex of simple states") {
    // z1 = r^{1/2} e^{i(phi/2 + psi/2)} cos(theta/2)
    std::string s = latex_euler_form(z1());
    CHECK(s.find("r^{\\tfrac{1}{2}}") != std::string::npos);
    CHECK(s.find("\\cos\\!") != std::string::npos);
    CHECK(s.find("\\psi") != std::string::npos);

    // |z1|^2 - |z2|^2 has no phi/psi phases
    std::string mid = latex_euler_form(z1() * z1b() - z2() * z2b());
    CHECK(mid.find("\\phi") == std::string::npos);
    CHECK(mid.find("\\psi") == std::string::npos);
}

TEST_CASE("table report json shape") {
    Json j = table_report_json(verify_table(TableId::AlphaBeta));
    CHECK(j["table"] == "alpha_beta");
    CHECK(j["all_pass"] == true);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["status"] == "pass");
    CHECK(j["entries"][0]["residual"].is_array());
    CHECK(j["entries"][0]["residual"].empty()); // zero operator
}

TEST_CASE("significant digit formatting") {
    CHECK(format_sig(0.5) == "0.5");
    CHECK(format_sig(-2.0 / 9.0) == "-0.222222222222");
    CHECK(format_sig(1.4142135623730951, 6) == "1.41421");
}
