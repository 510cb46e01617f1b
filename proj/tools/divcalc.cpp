// divcalc: batch front end over the divisor engines.
//
//   divcalc minkowski-report F0.json --d1 1,2 --d2 2,1
//   divcalc decompose F1.json --d=1,1 --format table
//   divcalc catalog list | divcalc catalog export DIR
//
// Exit status: 0 all checks certified, 1 a check failed, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "divcalc/catalog.hpp"
#include "divcalc/report.hpp"

namespace {

std::vector<std::size_t> parse_flag(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw divcalc::Error("invalid-flag", "--flag expects comma-separated ray indices, got \"" + text + "\"");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact divisor calculus: Zariski decompositions, volumes, slopes, Minkowski-type inequalities"};
    app.require_subcommand(1);

    std::string model_spec, d, d1, d2, flag, format = "json", out_dir;
    long m_max = 12, count = 0;
    std::uint64_t seed = divcalc::kDefaultSeed;

    const std::map<std::string, std::string> about{
        {"decompose", "Zariski decomposition D = P + N (--d, or --count random classes)"},
        {"volume", "volume of a class (--d)"},
        {"slope", "largest s with <D1> - s<D2> pseudo-effective (--d1 --d2)"},
        {"s-sequence", "positive products s_i = <D1^i D2^(d-i)> (--d1 --d2)"},
        {"minkowski-report", "all inequalities for a pair (--d1 --d2, or --count random pairs)"},
        {"diskant", "Diskant inequality for a pair (--d1 --d2)"},
        {"radii", "inradius/outradius chain for a pair (--d1 --d2)"},
        {"okounkov", "Okounkov body samples of a toric divisor (--d, --m-max, --flag)"},
        {"bplus", "divisorial augmented base locus on a surface (--d)"},
    };
    for (const auto& name : divcalc::command_names()) {
        auto it = about.find(name);
        auto* sub = app.add_subcommand(name, it == about.end() ? std::string() : it->second);
        sub->add_option("model", model_spec, "model file or built-in catalog name (e.g. F1.json)")->required();
        sub->add_option("--d", d, "divisor class, comma-separated rationals");
        sub->add_option("--d1", d1, "first divisor class");
        sub->add_option("--d2", d2, "second divisor class");
        sub->add_option("--m-max", m_max, "highest Okounkov level")->check(CLI::Range(1L, 200L));
        sub->add_option("--seed", seed, "seed for randomized cases");
        sub->add_option("--count", count, "number of random cases")->check(CLI::Range(0L, 100000L));
        sub->add_option("--flag", flag, "flag as ray indices of a maximal cone, in order");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    }
    auto* cat = app.add_subcommand("catalog", "list or export the built-in models");
    auto* list = cat->add_subcommand("list", "print the built-in model names");
    auto* exp = cat->add_subcommand("export", "write every built-in model to a directory");
    exp->add_option("dir", out_dir)->required();
    cat->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (cat->parsed()) {
        try {
            if (list->parsed())
                for (const auto& n : divcalc::catalog_names()) std::cout << n << "\n";
            if (exp->parsed()) {
                std::filesystem::create_directories(out_dir);
                for (const auto& n : divcalc::catalog_names()) {
                    std::ofstream f(std::filesystem::path(out_dir) / n, std::ios::binary);
                    f << divcalc::catalog_document(n);
                    if (!f) throw divcalc::Error("io-error", "cannot write " + n);
                }
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return 0;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto fmt = format == "table" ? divcalc::Format::table : divcalc::Format::json;
    try {
        auto model = divcalc::load_model(model_spec);
        const std::size_t len = model.is_surface() ? model.surface().rank() : model.toric().num_rays();
        divcalc::RunArgs args;
        if (!d.empty()) args.d = divcalc::parse_divisor(d, len);
        if (!d1.empty()) args.d1 = divcalc::parse_divisor(d1, len);
        if (!d2.empty()) args.d2 = divcalc::parse_divisor(d2, len);
        if (!flag.empty()) args.flag = parse_flag(flag);
        args.m_max = m_max;
        args.seed = seed;
        args.count = count;
        auto report = divcalc::run_command(command, model, args);
        std::cout << divcalc::render_report(report, fmt);
        return report["certified"].get<bool>() ? 0 : 1;
    } catch (const divcalc::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        if (fmt == divcalc::Format::json) std::cout << divcalc::render_report(divcalc::error_report(e), fmt);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error [internal]: " << e.what() << "\n";
        return 2;
    }
}
