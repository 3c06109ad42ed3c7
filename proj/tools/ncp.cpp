#include "CLI11.hpp"
#include "json.hpp"

#include "ncp/algebra.hpp"
#include "ncp/characters.hpp"
#include "ncp/combinatorics.hpp"
#include "ncp/errors.hpp"
#include "ncp/guards.hpp"
#include "ncp/invariants.hpp"
#include "ncp/partition.hpp"
#include "ncp/polynomial.hpp"
#include "ncp/rational.hpp"
#include "ncp/series.hpp"
#include "ncp/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

std::string fmt(const ncp::Rational& r) { return ncp::format_rational(r); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string basis_name(ncp::PolyBasis b) {
    return b == ncp::PolyBasis::monomial ? "monomial" : "hilbert";
}

json poly_json(const ncp::RationalPolynomial& p, ncp::PolyBasis basis) {
    ncp::RationalPolynomial q = p.to_basis(basis);
    json coeffs = json::array();
    for (const auto& c : q.coefficients()) coeffs.push_back(fmt(c));
    return json{{"basis", basis_name(basis)},
                {"coefficients", coeffs},
                {"text", q.text()}};
}

// One partition from --partition, or one per stdin line with "-".
std::vector<std::string> partition_inputs(const std::string& arg) {
    if (arg != "-") return {arg};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void emit(const std::string& format, bool batch, const std::vector<std::string>& text_lines,
          const std::vector<json>& objects, const std::string& csv_header,
          const std::vector<std::string>& csv_rows) {
    if (format == "json") {
        if (batch) {
            json arr = json::array();
            for (const auto& o : objects) arr.push_back(o);
            std::cout << arr.dump(2) << '\n';
        } else {
            std::cout << objects.front().dump(2) << '\n';
        }
    } else if (format == "csv") {
        std::cout << csv_header << '\n';
        for (const auto& row : csv_rows) std::cout << row << '\n';
    } else {
        for (const auto& line : text_lines) std::cout << line << '\n';
    }
}

// ---- enumerate -----------------------------------------------------------

int run_enumerate(const std::string& format, int legs, int blocks, bool count_only) {
    std::vector<ncp::NoncrossingPartition> all = ncp::enumerate_ncp(legs);
    if (blocks >= 0) {
        std::erase_if(all, [&](const auto& p) { return p.block_count() != blocks; });
    }
    if (count_only) {
        std::string n = std::to_string(all.size());
        json o{{"command", "enumerate"}, {"legs", legs}, {"count", all.size()}};
        if (blocks >= 0) o["blocks"] = blocks;
        emit(format, false, {n}, {o}, "count", {n});
        return 0;
    }
    std::vector<std::string> lines, rows;
    json arr = json::array();
    for (const auto& p : all) {
        lines.push_back(p.text());
        rows.push_back(csv_field(p.text()));
        arr.push_back(p.text());
    }
    json o{{"command", "enumerate"}, {"legs", legs}, {"partitions", arr}};
    if (blocks >= 0) o["blocks"] = blocks;
    emit(format, false, lines, {o}, "partition", rows);
    return 0;
}

// ---- eval ----------------------------------------------------------------

ncp::PolynomialInvariant invariant_by_name(const std::string& name,
                                           const std::string& algorithm) {
    if (name == "phi") {
        ncp::PhiAlgorithm algo = ncp::PhiAlgorithm::recurrence;
        if (algorithm == "coproduct") algo = ncp::PhiAlgorithm::coproduct;
        else if (algorithm == "interpolation") algo = ncp::PhiAlgorithm::interpolation;
        else if (algorithm != "recurrence" && !algorithm.empty())
            throw ncp::Error("unknown algorithm '" + algorithm + "'");
        return ncp::phi_invariant(algo);
    }
    if (!algorithm.empty())
        throw ncp::Error("--algorithm applies to the phi invariant only");
    if (name == "lambda") return ncp::lambda_invariant();
    if (name == "lambda-strict") return ncp::lambda_strict_invariant();
    if (name == "phi0") return ncp::phi_zero_invariant();
    throw ncp::Error("unknown invariant '" + name + "'");
}

int run_invariant(const std::string& format, const std::string& name,
                  const std::string& partition_arg, const std::string& algorithm,
                  const std::string& basis_arg) {
    ncp::PolyBasis basis = basis_arg == "hilbert" ? ncp::PolyBasis::binomial_falling
                                                  : ncp::PolyBasis::monomial;
    ncp::PolynomialInvariant inv = invariant_by_name(name, algorithm);
    std::vector<std::string> inputs = partition_inputs(partition_arg);
    std::vector<std::string> lines, rows;
    std::vector<json> objects;
    for (const auto& text : inputs) {
        ncp::NoncrossingPartition p = ncp::NoncrossingPartition::parse(text);
        ncp::RationalPolynomial value = inv(p).to_basis(basis);
        lines.push_back(value.text());
        for (int k = 0; k <= value.degree(); ++k)
            rows.push_back(csv_field(p.text()) + "," + std::to_string(k) + "," +
                           fmt(value.coefficient(k)));
        json o = poly_json(value, basis);
        o["command"] = "invariant";
        o["name"] = name;
        o["partition"] = p.text();
        objects.push_back(std::move(o));
    }
    emit(format, partition_arg == "-", lines, objects, "partition,coeff_index,value",
         rows);
    return 0;
}

int run_character(const std::string& format, const std::string& name,
                  const std::string& partition_arg, const std::string& q_text) {
    ncp::Rational q = ncp::parse_rational(q_text);
    ncp::Character chi = ncp::character_by_name(name, q);
    std::vector<std::string> inputs = partition_inputs(partition_arg);
    std::vector<std::string> lines, rows;
    std::vector<json> objects;
    for (const auto& text : inputs) {
        ncp::NoncrossingPartition p = ncp::NoncrossingPartition::parse(text);
        ncp::Rational value = chi(p);
        lines.push_back(fmt(value));
        rows.push_back(csv_field(p.text()) + "," + fmt(value));
        objects.push_back(json{{"command", "character"},
                               {"name", name},
                               {"q", fmt(q)},
                               {"partition", p.text()},
                               {"value", fmt(value)}});
    }
    emit(format, partition_arg == "-", lines, objects, "partition,value", rows);
    return 0;
}

int run_coproduct(const std::string& format, const std::string& kind,
                  const std::string& partition_arg) {
    std::vector<std::string> inputs = partition_inputs(partition_arg);
    std::vector<std::string> lines, rows;
    std::vector<json> objects;
    for (const auto& text : inputs) {
        ncp::NoncrossingPartition p = ncp::NoncrossingPartition::parse(text);
        ncp::TensorElement t = kind == "separation" ? ncp::coproduct_separation(p)
                                                    : ncp::coproduct_fusion(p);
        lines.push_back(t.text());
        json terms = json::array();
        for (const auto& [key, c] : t.terms()) {
            rows.push_back(csv_field(p.text()) + "," + fmt(c) + "," +
                           csv_field(key[0].text()) + "," + csv_field(key[1].text()));
            terms.push_back(json{{"coefficient", fmt(c)},
                                 {"left", key[0].text()},
                                 {"right", key[1].text()}});
        }
        objects.push_back(json{{"command", "coproduct"},
                               {"kind", kind},
                               {"partition", p.text()},
                               {"terms", terms},
                               {"text", t.text()}});
    }
    emit(format, partition_arg == "-", lines, objects,
         "partition,coefficient,left,right", rows);
    return 0;
}

int run_antipode(const std::string& format, const std::string& partition_arg) {
    std::vector<std::string> inputs = partition_inputs(partition_arg);
    std::vector<std::string> lines, rows;
    std::vector<json> objects;
    for (const auto& text : inputs) {
        ncp::NoncrossingPartition p = ncp::NoncrossingPartition::parse(text);
        ncp::AlgebraElement s = ncp::antipode(p);
        lines.push_back(s.text());
        json terms = json::array();
        for (const auto& [m, c] : s.terms()) {
            rows.push_back(csv_field(p.text()) + "," + fmt(c) + "," +
                           csv_field(m.text()));
            terms.push_back(json{{"coefficient", fmt(c)}, {"monomial", m.text()}});
        }
        objects.push_back(json{{"command", "antipode"},
                               {"partition", p.text()},
                               {"terms", terms},
                               {"text", s.text()}});
    }
    emit(format, partition_arg == "-", lines, objects, "partition,coefficient,monomial",
         rows);
    return 0;
}

// ---- verify --------------------------------------------------------------

int run_verify(const std::string& format, const std::string& suite, int max_legs) {
    ncp::VerificationReport report = ncp::run_suite(suite, max_legs);
    int passed = 0;
    for (const auto& c : report.checks)
        if (c.pass) ++passed;
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"id", c.id},
                                  {"scope", c.scope},
                                  {"pass", c.pass},
                                  {"witness", c.witness}});
        json o{{"command", "verify"},
               {"suite", suite},
               {"max_legs", max_legs},
               {"checks", checks},
               {"all_pass", report.all_pass()}};
        std::cout << o.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "id,scope,pass,witness\n";
        for (const auto& c : report.checks)
            std::cout << csv_field(c.id) << ',' << csv_field(c.scope) << ','
                      << (c.pass ? "true" : "false") << ',' << csv_field(c.witness)
                      << '\n';
    } else {
        std::cout << report.text();
        std::cout << "suite " << suite << ": " << passed << "/" << report.checks.size()
                  << " checks passed\n";
    }
    return report.all_pass() ? 0 : 1;
}

// ---- series --------------------------------------------------------------

std::vector<ncp::Rational> parse_coeff_list(const std::string& text) {
    std::vector<ncp::Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(ncp::parse_rational(item));
    if (out.empty()) throw ncp::ParseError("empty coefficient list");
    return out;
}

int run_series_invert(const std::string& format, const std::string& coeffs_text,
                      int order, const std::string& method) {
    ncp::FormalSeries f(parse_coeff_list(coeffs_text));
    ncp::FormalSeries g = method == "ncp" ? ncp::invert_ncp(f, order)
                                          : ncp::invert_oracle(f, order);
    std::string joined;
    json arr = json::array();
    std::vector<std::string> rows;
    for (int n = 1; n <= g.order(); ++n) {
        if (n > 1) joined += ',';
        joined += fmt(g.coefficient(n));
        arr.push_back(fmt(g.coefficient(n)));
        rows.push_back(std::to_string(n) + "," + fmt(g.coefficient(n)));
    }
    json input = json::array();
    for (const auto& a : f.coefficients()) input.push_back(fmt(a));
    json o{{"command", "series-invert"},
           {"method", method},
           {"order", order},
           {"input", input},
           {"coefficients", arr}};
    emit(format, false, {joined}, {o}, "n,value", rows);
    return 0;
}

// ---- table ---------------------------------------------------------------

int run_table(const std::string& format, const std::string& which, int max_n) {
    std::vector<std::string> rows;
    json entries = json::array();
    std::string header;
    if (which == "a-in") {
        header = "i,n,value";
        auto a = ncp::a_table(max_n, max_n);
        for (int i = 1; i <= max_n; ++i)
            for (int n = 1; n <= max_n; ++n) {
                rows.push_back(std::to_string(i) + "," + std::to_string(n) + "," +
                               a[i - 1][n - 1].str());
                entries.push_back(json{{"i", i}, {"n", n}, {"value", a[i - 1][n - 1].str()}});
            }
    } else {
        header = "n,coeff_index,p,q";
        auto push = [&](int n, int k, const ncp::Rational& c) {
            std::string p = boost::multiprecision::numerator(c).str();
            std::string q = boost::multiprecision::denominator(c).str();
            rows.push_back(std::to_string(n) + "," + std::to_string(k) + "," + p + "," + q);
            entries.push_back(json{{"n", n}, {"coeff_index", k}, {"p", p}, {"q", q}});
        };
        if (which == "p-n") {
            for (int n = 1; n <= max_n; ++n) {
                ncp::RationalPolynomial pn =
                    ncp::ladder_polynomial(n).to_basis(ncp::PolyBasis::monomial);
                for (int k = 0; k <= n; ++k) push(n, k, pn.coefficient(k));
            }
        } else {  // lambda-jn
            for (int n = 1; n <= max_n; ++n) push(n, 1, ncp::lambda_ncp_ladder(n));
        }
    }
    if (format == "json") {
        json o{{"command", "table"}, {"table", which}, {"max_n", max_n},
               {"entries", entries}};
        std::cout << o.dump(2) << '\n';
    } else {
        std::cout << header << '\n';
        for (const auto& r : rows) std::cout << r << '\n';
    }
    return 0;
}

int exit_code_for(const ncp::Error& e) {
    if (dynamic_cast<const ncp::DegreeOverflow*>(&e) != nullptr) return 3;
    if (dynamic_cast<const ncp::NonInvertible*>(&e) != nullptr) return 4;
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("NCP_GUARD_BLOCKS")) {
        try {
            int v = std::stoi(env);
            ncp::guards().ideal_blocks = v;
            ncp::guards().equivalence_blocks = v;
        } catch (const std::exception&) {
            std::cerr << "error: NCP_GUARD_BLOCKS must be an integer\n";
            return 2;
        }
    }

    CLI::App app{"Exact arithmetic for the double bialgebra of noncrossing partitions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    int exit_code = 0;

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List noncrossing partitions");
    enumerate->fallthrough();
    int en_legs = 0, en_blocks = -1;
    bool en_count = false;
    enumerate->add_option("--legs", en_legs, "Number of legs")->required();
    enumerate->add_option("--blocks", en_blocks, "Keep only this block count");
    enumerate->add_flag("--count", en_count, "Print only the cardinality");
    enumerate->callback(
        [&]() { exit_code = run_enumerate(format, en_legs, en_blocks, en_count); });

    // eval with four kinds, plus top-level aliases for the first two
    std::string ev_name, ev_partition, ev_algorithm, ev_basis = "monomial",
                ev_q = "1", ev_kind;

    auto add_invariant_options = [&](CLI::App* cmd) {
        cmd->fallthrough();
        cmd->add_option("name", ev_name, "phi, lambda, lambda-strict or phi0")
            ->required();
        cmd->add_option("--partition", ev_partition, "Partition text, or - for stdin")
            ->required();
        cmd->add_option("--algorithm", ev_algorithm,
                        "phi only: coproduct, recurrence or interpolation");
        cmd->add_option("--basis", ev_basis, "Output basis")
            ->check(CLI::IsMember({"monomial", "hilbert"}));
        cmd->callback([&]() {
            exit_code =
                run_invariant(format, ev_name, ev_partition, ev_algorithm, ev_basis);
        });
    };
    auto add_character_options = [&](CLI::App* cmd) {
        cmd->fallthrough();
        cmd->add_option("name", ev_name, "Character name")->required();
        cmd->add_option("--partition", ev_partition, "Partition text, or - for stdin")
            ->required();
        cmd->add_option("--q", ev_q, "Parameter for the gamma family");
        cmd->callback(
            [&]() { exit_code = run_character(format, ev_name, ev_partition, ev_q); });
    };

    auto* eval = app.add_subcommand("eval", "Evaluate on partitions");
    eval->require_subcommand(1);
    eval->fallthrough();
    add_invariant_options(eval->add_subcommand("invariant", "Polynomial invariants"));
    add_character_options(eval->add_subcommand("character", "Rational characters"));
    auto* coproduct = eval->add_subcommand("coproduct", "Expand a coproduct");
    coproduct->fallthrough();
    coproduct->add_option("kind", ev_kind, "separation or fusion")
        ->required()
        ->check(CLI::IsMember({"separation", "fusion"}));
    coproduct->add_option("--partition", ev_partition, "Partition text, or - for stdin")
        ->required();
    coproduct->callback(
        [&]() { exit_code = run_coproduct(format, ev_kind, ev_partition); });
    auto* antipode_cmd = eval->add_subcommand("antipode", "Expand the antipode");
    antipode_cmd->fallthrough();
    antipode_cmd
        ->add_option("--partition", ev_partition, "Partition text, or - for stdin")
        ->required();
    antipode_cmd->callback([&]() { exit_code = run_antipode(format, ev_partition); });

    add_invariant_options(
        app.add_subcommand("invariant", "Alias for eval invariant"));
    add_character_options(
        app.add_subcommand("character", "Alias for eval character"));

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    std::string ve_suite;
    int ve_max_legs = 5;
    verify->add_option("--suite", ve_suite, "Suite name")->required();
    verify->add_option("--max-legs", ve_max_legs, "Exhaustive bound");
    verify->callback([&]() { exit_code = run_verify(format, ve_suite, ve_max_legs); });

    // series
    auto* series = app.add_subcommand("series", "Formal power series tools");
    series->require_subcommand(1);
    series->fallthrough();
    auto* invert = series->add_subcommand("invert", "Compositional inverse");
    invert->fallthrough();
    std::string se_coeffs, se_method = "oracle";
    int se_order = 0;
    invert->add_option("--coeffs", se_coeffs, "a_1,a_2,... after the leading x")
        ->required();
    invert->add_option("--order", se_order, "Truncation order")->required();
    invert->add_option("--method", se_method, "oracle or ncp")
        ->check(CLI::IsMember({"oracle", "ncp"}));
    invert->callback([&]() {
        exit_code = run_series_invert(format, se_coeffs, se_order, se_method);
    });

    // table
    auto* table = app.add_subcommand("table", "Emit coefficient tables");
    table->require_subcommand(1);
    table->fallthrough();
    std::string ta_which;
    int ta_max_n = 10;
    for (const char* name : {"a-in", "p-n", "lambda-jn"}) {
        auto* sub = table->add_subcommand(name);
        sub->fallthrough();
        sub->add_option("--max-n", ta_max_n, "Largest n")->required();
        sub->callback([&, name]() {
            ta_which = name;
            exit_code = run_table(format, ta_which, ta_max_n);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ncp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
