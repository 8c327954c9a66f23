#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <string>

#include "glnq/characters.hpp"
#include "glnq/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    int n = 2;
    int q = 2;
    std::string coeff = "cyclotomic";
    std::string lambda;
    std::uint64_t seed = 0;
    std::string format = "tsv";
    std::uint64_t budget_elements = 10'000'000;
    std::string cache_dir;

    glnq::EnumBudget budget() const {
        glnq::EnumBudget b;
        b.max_elements = budget_elements;
        return b;
    }

    const glnq::CoeffField& coeff_field() const {
        int p = glnq::FieldSpec::get(q).p();
        if (coeff == "cyclotomic") return glnq::CoeffField::cyclotomic(p);
        if (coeff.rfind("mod:", 0) == 0)
            return glnq::CoeffField::modular(p, std::stoll(coeff.substr(4)));
        throw CLI::ValidationError("--coeff", "expected 'cyclotomic' or 'mod:L'");
    }

    bool json_output() const { return format == "json"; }
};

int run_dims(const Options& opt) {
    const glnq::FieldSpec& f = glnq::FieldSpec::get(opt.q);
    const glnq::CoeffField& K = opt.coeff_field();
    std::vector<glnq::Partition> shapes;
    if (opt.lambda.empty())
        shapes = glnq::partitions_of(opt.n);
    else
        shapes.push_back(glnq::Partition::parse(opt.lambda));

    bool hit_budget = false;
    json rows = json::array();
    for (const auto& la : shapes) {
        if (la.sum() != opt.n) throw CLI::ValidationError("--lambda", "must be a partition of n");
        json row;
        row["lambda"] = la.str();
        row["dim_M"] = glnq::flag_count(la, opt.q).get_str();
        try {
            glnq::SpanBasis basis = glnq::s_basis(la, f, K, opt.budget());
            glnq::GramResult gram = glnq::gram_and_radical(basis);
            row["dim_S"] = basis.rank();
            row["dim_D"] = gram.d_dim;
        } catch (const glnq::budget_error&) {
            row["error"] = "budget-exceeded";
            hit_budget = true;
        }
        rows.push_back(std::move(row));
    }

    if (opt.json_output()) {
        json out{{"command", "dims"}, {"n", opt.n},      {"q", opt.q},
                 {"coeff", K.str()},  {"rows", rows}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "lambda\tdim_M\tdim_S\tdim_D\n";
        for (const auto& row : rows) {
            std::cout << row["lambda"].get<std::string>() << '\t'
                      << row["dim_M"].get<std::string>() << '\t';
            if (row.contains("error"))
                std::cout << "budget-exceeded\tbudget-exceeded\n";
            else
                std::cout << row["dim_S"].get<long long>() << '\t'
                          << row["dim_D"].get<long long>() << '\n';
        }
    }
    return hit_budget ? kExitBudget : kExitOk;
}

int run_verify(const Options& opt, const std::string& suite) {
    std::vector<glnq::CheckResult> results;
    auto append = [&results](std::vector<glnq::CheckResult> more) {
        results.insert(results.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
    };
    if (suite == "lemmas" || suite == "all")
        append(glnq::verify_lemmas(opt.n, opt.q, opt.coeff_field(), opt.seed, opt.budget()));
    if (suite == "characters" || suite == "all")
        append(glnq::verify_characters(opt.n, opt.q, opt.seed, opt.budget(), opt.cache_dir));
    if (suite == "kostka" || suite == "all")
        append(glnq::verify_kostka(opt.n, opt.q, opt.budget(), opt.cache_dir));

    bool all_pass = true;
    if (opt.json_output()) {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all_pass = all_pass && r.pass;
        }
        std::cout << json{{"command", "verify"}, {"suite", suite}, {"n", opt.n},
                          {"q", opt.q},          {"checks", out}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << '\t' << r.name;
            if (!r.pass) std::cout << '\t' << r.detail;
            std::cout << '\n';
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_tables(const Options& opt, const std::string& kind) {
    auto shapes = glnq::partitions_of(opt.n);
    json cells = json::array();

    std::unique_ptr<glnq::UnipotentContext> ctx;
    if (kind == "multiplicities")
        ctx = std::make_unique<glnq::UnipotentContext>(opt.n, opt.q, opt.coeff_field(),
                                                       opt.budget(), opt.cache_dir);

    for (const auto& mu : shapes) {
        json row = json::array();
        for (const auto& la : shapes) {
            if (kind == "kostka")
                row.push_back(glnq::kostka_number(mu, la));
            else if (kind == "kostka-poly")
                row.push_back(glnq::kostka_polynomial(mu, la).str());
            else
                row.push_back(ctx->ggg_multiplicity(la, mu));
        }
        cells.push_back(std::move(row));
    }

    if (opt.json_output()) {
        json parts = json::array();
        for (const auto& la : shapes) parts.push_back(la.str());
        std::cout << json{{"command", "tables"}, {"kind", kind},        {"n", opt.n},
                          {"q", opt.q},          {"partitions", parts}, {"matrix", cells}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "mu\\lambda";
        for (const auto& la : shapes) std::cout << '\t' << la.str();
        std::cout << '\n';
        for (size_t r = 0; r < shapes.size(); ++r) {
            std::cout << shapes[r].str();
            for (const auto& cell : cells[r]) {
                std::cout << '\t';
                if (cell.is_string())
                    std::cout << cell.get<std::string>();
                else
                    std::cout << cell.get<long long>();
            }
            std::cout << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact unipotent modules of GL_n(F_q): dimensions, characters, and identity checks"};
    app.fallthrough();
    Options opt;
    app.add_option("--n", opt.n, "rank n of GL_n")->check(CLI::PositiveNumber);
    app.add_option("--q", opt.q, "field size q (a prime power)")->check(CLI::PositiveNumber);
    app.add_option("--coeff", opt.coeff, "coefficient field: cyclotomic | mod:L");
    app.add_option("--lambda", opt.lambda, "restrict to one partition, e.g. \"2,1\"");
    app.add_option("--seed", opt.seed, "seed for the randomized property checks");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--budget-elements", opt.budget_elements, "largest group summation allowed");
    app.add_option("--cache-dir", opt.cache_dir, "directory for the persistent trace cache");

    auto* dims = app.add_subcommand("dims", "dim M^lambda, dim S^lambda, dim D^lambda per shape");
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named identity suite");
    verify->add_option("suite", suite, "lemmas | characters | kostka | all")
        ->required()
        ->check(CLI::IsMember({"lemmas", "characters", "kostka", "all"}));
    std::string kind;
    auto* tables = app.add_subcommand("tables", "Kostka and multiplicity tables");
    tables->add_option("kind", kind, "kostka | kostka-poly | multiplicities")
        ->required()
        ->check(CLI::IsMember({"kostka", "kostka-poly", "multiplicities"}));
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dims->parsed()) return run_dims(opt);
        if (verify->parsed()) return run_verify(opt, suite);
        return run_tables(opt, kind);
    } catch (const glnq::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
