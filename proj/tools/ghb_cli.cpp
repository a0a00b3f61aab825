#include <complex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghb/genbernoulli.hpp"
#include "ghb/series.hpp"
#include "ghb/verify.hpp"

using nlohmann::json;
using namespace ghb;

namespace {

json cyc_to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(q.str());
    return json{{"order", c.order()}, {"coeffs", coeffs}};
}

std::string cyc_to_csv(const Cyclotomic& c) { return "\"" + c.str() + "\""; }

std::complex<double> cyc_approx(const Cyclotomic& c) {
    std::complex<double> acc(0.0, 0.0);
    const double pi = 3.14159265358979323846;
    for (size_t j = 0; j < c.coeffs().size(); ++j) {
        double arg = 2.0 * pi * static_cast<double>(j) / static_cast<double>(c.order());
        acc += c.coeffs()[j].to_double() * std::polar(1.0, arg);
    }
    return acc;
}

std::string approx_str(const Cyclotomic& c) {
    auto z = cyc_approx(c);
    std::ostringstream os;
    os.precision(12);
    if (std::abs(z.imag()) < 1e-12)
        os << z.real();
    else
        os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

json poly_to_json(const GHBPolynomial& p) {
    json coeffs = json::array();
    for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(cyc_to_json(p.coeff(static_cast<size_t>(i))));
    return json{{"order", p.order()}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

std::string poly_to_csv(const GHBPolynomial& p) {
    std::ostringstream os;
    os << '"';
    if (p.is_zero()) os << "0";
    for (long i = 0; i <= p.degree(); ++i) {
        if (i) os << " | ";
        os << "x^" << i << ": " << p.coeff(static_cast<size_t>(i)).str();
    }
    os << '"';
    return os.str();
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Cyclotomic compute_number(const std::string& method, unsigned N, unsigned n,
                          const DirichletCharacter& chi) {
    if (method == "oracle") return oracle_numbers(N, chi, n)[n];
    if (method == "cor10") return gbn_cor10(N, n, chi);
    if (method == "recurrence") return gbn_recurrence(N, n, chi);
    if (method == "tsum") return gbn_Tsum(N, n, chi);
    if (method == "ttilde") return gbn_Ttilde(N, n, chi);
    if (method == "determinant") return gbn_determinant(N, n, chi);
    if (method == "hbp") return gbn_via_hbp(N, n, chi);
    throw UsageError("unknown method: " + method);
}

GHBPolynomial compute_poly(const std::string& method, unsigned N, unsigned n,
                           const DirichletCharacter& chi) {
    if (method == "recurrence") return gbp_recurrence_poly(N, n, chi);
    if (method == "determinant" && n >= 1) return gbp_determinant(N, n, chi);
    if (method == "determinant") return gbp_from_numbers(N, n, chi);
    if (method == "tsum" && n >= 1) return gbp_Tsum_poly(N, n, chi, false);
    if (method == "ttilde" && n >= 1) return gbp_Tsum_poly(N, n, chi, true);
    if (method == "tsum" || method == "ttilde") return gbp_from_numbers(N, n, chi);
    if (method == "cor10" || method == "hbp") return gbp_from_numbers(N, n, chi);
    throw UsageError("method not available for polynomials: " + method);
}

const std::vector<std::string> kNumberMethods = {"oracle",      "cor10",  "recurrence", "tsum",
                                                 "ttilde",      "determinant", "hbp"};
const std::vector<std::string> kPolyMethods = {"recurrence", "determinant", "tsum", "ttilde"};

int run_list(long f, const std::string& format) {
    auto chars = enumerate_characters(f);
    if (format == "json") {
        json out = json::array();
        for (const auto& chi : chars) {
            json values = json::array();
            for (const auto& v : chi.values()) values.push_back(cyc_to_json(v));
            out.push_back(json{{"modulus", chi.modulus()},
                               {"index", chi.index()},
                               {"order", chi.order()},
                               {"parity", chi.parity()},
                               {"conductor", chi.conductor()},
                               {"primitive", chi.primitive()},
                               {"values", values}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "index,order,parity,conductor,primitive,values\n";
        for (const auto& chi : chars) {
            std::cout << chi.index() << "," << chi.order() << "," << chi.parity() << ","
                      << chi.conductor() << "," << (chi.primitive() ? 1 : 0) << ",";
            std::ostringstream os;
            for (long a = 0; a < chi.modulus(); ++a) {
                if (a) os << " ";
                os << chi(a).str();
            }
            std::cout << '"' << os.str() << "\"\n";
        }
    }
    return 0;
}

int run_compute(long f, const std::string& index_arg, unsigned N, unsigned n_from, unsigned n_to,
                const std::string& method, const std::string& target, const std::string& format,
                const std::optional<std::string>& x0_arg, bool approx) {
    if (n_to < n_from) throw UsageError("--n-to must be >= --n-from");
    std::vector<DirichletCharacter> chars;
    if (index_arg == "all") {
        chars = enumerate_characters(f);
    } else {
        chars.push_back(character(f, std::stol(index_arg)));
    }
    std::optional<Rational> x0;
    if (x0_arg) x0 = Rational::parse(*x0_arg);

    json jrows = json::array();
    std::ostringstream csv;
    if (target == "numbers")
        csv << "modulus,index,N,n,value" << (approx ? ",approx" : "") << "\n";
    else
        csv << "modulus,index,N,n,polynomial" << (x0 ? ",value_at_x0" : "") << "\n";

    for (const auto& chi : chars) {
        for (unsigned n = n_from; n <= n_to; ++n) {
            json row{{"modulus", f}, {"index", chi.index()}, {"N", N}, {"n", n}};
            if (target == "numbers") {
                Cyclotomic value(static_cast<unsigned long>(chi.order()));
                if (method == "all") {
                    value = compute_number(kNumberMethods[0], N, n, chi);
                    for (size_t i = 1; i < kNumberMethods.size(); ++i) {
                        if (!(compute_number(kNumberMethods[i], N, n, chi) == value)) {
                            std::cerr << "cross-method mismatch at f=" << f
                                      << " idx=" << chi.index() << " N=" << N << " n=" << n
                                      << " method=" << kNumberMethods[i] << "\n";
                            return 1;
                        }
                    }
                    row["methods_agree"] = true;
                } else {
                    value = compute_number(method, N, n, chi);
                }
                row["value"] = cyc_to_json(value);
                if (approx) row["approx"] = approx_str(value);
                csv << f << "," << chi.index() << "," << N << "," << n << ","
                    << cyc_to_csv(value);
                if (approx) csv << "," << approx_str(value);
                csv << "\n";
            } else if (target == "polynomials") {
                GHBPolynomial p(static_cast<unsigned long>(chi.order()));
                if (method == "all") {
                    p = gbp_from_numbers(N, n, chi);
                    for (const auto& mname : kPolyMethods) {
                        if (n == 0 && mname != "recurrence") continue;
                        if (!(compute_poly(mname, N, n, chi) == p)) {
                            std::cerr << "cross-method mismatch (polynomials) at f=" << f
                                      << " idx=" << chi.index() << " N=" << N << " n=" << n
                                      << " method=" << mname << "\n";
                            return 1;
                        }
                    }
                    row["methods_agree"] = true;
                } else if (method == "oracle") {
                    if (!x0) throw UsageError("method=oracle for polynomials requires --x0");
                    p = GHBPolynomial::constant(oracle_poly_eval(N, chi, *x0, n)[n]);
                } else {
                    p = compute_poly(method, N, n, chi);
                }
                row["polynomial"] = poly_to_json(p);
                if (x0) row["value_at_x0"] = cyc_to_json(p.evaluate(*x0));
                csv << f << "," << chi.index() << "," << N << "," << n << "," << poly_to_csv(p);
                if (x0) csv << "," << cyc_to_csv(p.evaluate(*x0));
                csv << "\n";
            } else {
                throw UsageError("unknown target: " + target);
            }
            jrows.push_back(std::move(row));
        }
    }
    if (format == "json")
        std::cout << jrows.dump(2) << "\n";
    else
        std::cout << csv.str();
    return 0;
}

int run_verify(const std::string& suite, unsigned maxN, unsigned maxn, long maxf) {
    std::vector<SuiteReport> reports;
    const auto moduli = moduli_up_to(maxf);
    if (suite == "all") {
        reports = verify_all(maxN, maxn, maxf);
    } else if (suite == "five-way") {
        reports.push_back(verify_five_way(maxN, maxn, moduli));
    } else if (suite == "polynomials") {
        reports.push_back(verify_polynomials(maxN, maxn, moduli));
    } else if (suite == "appell") {
        reports.push_back(verify_appell(maxN, maxn, moduli));
    } else if (suite == "addition") {
        reports.push_back(verify_addition(maxN, maxn, moduli));
    } else if (suite == "brec") {
        reports.push_back(verify_brec(maxN, maxn, moduli));
    } else if (suite == "trivial") {
        reports.push_back(verify_trivial(maxN, maxn));
    } else if (suite == "appendix") {
        reports.push_back(verify_appendix(maxN, moduli));
    } else {
        throw UsageError("unknown suite: " + suite);
    }
    bool all_ok = true;
    for (const auto& rep : reports) {
        std::cout << rep.name << ": " << (rep.checks - rep.failures) << "/" << rep.checks
                  << " checks passed" << (rep.passed() ? "" : "  [FAIL]") << "\n";
        for (const auto& msg : rep.messages) std::cout << "  failed: " << msg << "\n";
        all_ok = all_ok && rep.passed();
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized hypergeometric Bernoulli numbers B_{N,n,chi} and polynomials.\n"
                 "Characters are addressed as f=<modulus>,idx=<index> where the index follows the\n"
                 "deterministic enumeration: lexicographic exponent tuples over the unit-group\n"
                 "generators (least primitive root per odd prime power; -1 then 5 for 2^k, k>=3)."};
    app.require_subcommand(1);

    long f = 1;
    std::string index_arg = "0";
    unsigned N = 1, n_from = 0, n_to = 10;
    std::string method = "all", target = "numbers", format = "json", suite = "all";
    std::optional<std::string> x0_arg;
    bool approx = false;
    unsigned maxN = 3, maxn = 10;
    long maxf = 8;

    auto* list = app.add_subcommand("list-characters", "List all characters mod f");
    list->add_option("-f,--modulus", f, "Modulus")->required()->check(CLI::PositiveNumber);
    list->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* compute = app.add_subcommand("compute", "Compute B_{N,n,chi} or B_{N,n,chi}(x)");
    compute->add_option("-f,--modulus", f, "Modulus")->required()->check(CLI::PositiveNumber);
    compute->add_option("--index", index_arg, "Character index or 'all'");
    compute->add_option("--N", N, "Order N of the hypergeometric family")->check(CLI::PositiveNumber);
    compute->add_option("--n-from", n_from, "First index n");
    compute->add_option("--n-to", n_to, "Last index n");
    compute->add_option("--method", method,
                        "oracle|cor10|recurrence|tsum|ttilde|determinant|hbp|all");
    compute->add_option("--target", target, "numbers|polynomials")
        ->check(CLI::IsMember({"numbers", "polynomials"}));
    compute->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--x0", x0_arg, "Rational evaluation point, e.g. 1/2");
    compute->add_flag("--approx", approx, "Add an approximate decimal column (clearly labelled)");

    auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
    verify->add_option("--suite", suite,
                       "all|five-way|polynomials|appell|addition|brec|trivial|appendix");
    verify->add_option("--max-N", maxN, "N bound");
    verify->add_option("--max-n", maxn, "n bound");
    verify->add_option("--max-f", maxf, "modulus bound");

    auto* table = app.add_subcommand(
        "table", "Number table for every character mod f, cross-checked across all methods");
    table->add_option("-f,--modulus", f, "Modulus")->required()->check(CLI::PositiveNumber);
    table->add_option("--N", N, "Order N")->check(CLI::PositiveNumber);
    table->add_option("--n-to", n_to, "Last index n");
    table->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_flag("--approx", approx, "Add an approximate decimal column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed()) return run_list(f, format);
        if (compute->parsed())
            return run_compute(f, index_arg, N, n_from, n_to, method, target, format, x0_arg,
                               approx);
        if (verify->parsed()) return run_verify(suite, maxN, maxn, maxf);
        if (table->parsed())
            return run_compute(f, "all", N, 0, n_to, "all", "numbers", format, std::nullopt,
                               approx);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
