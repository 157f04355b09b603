#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bezsub/job.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bezsub::Error(bezsub::ErrorCode::parse, "cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bezout subresultants of univariate polynomials in general bases"};

    std::string basis_spec, f_str, g_str, input_file, to_spec;
    std::string format_str = "text";
    int k = 0;
    bool monic = false;

    app.add_option("--basis", basis_spec, "basis spec: power:S | newton:N1,N2,... | custom:V0;V1;...");
    app.add_option("--f", f_str, "coefficients of F in the basis, ascending, comma-separated");
    app.add_option("--g", g_str, "coefficients of G in the basis, ascending, comma-separated");
    app.add_option("--input", input_file, "JSON job document (replaces the flags and subcommand)");
    app.add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_matrix = app.add_subcommand("matrix", "Bezout matrix of F and G in the basis");
    auto* cmd_subres = app.add_subcommand("subres", "k-th subresultant polynomial of F and G");
    cmd_subres->add_option("--k", k, "subresultant index")->required();
    auto* cmd_chain = app.add_subcommand("chain", "all subresultants S_0..S_m with principals");
    auto* cmd_gcd = app.add_subcommand("gcd", "gcd degree and the matching subresultant");
    cmd_gcd->add_flag("--monic", monic, "also emit the monic gcd");
    auto* cmd_convert = app.add_subcommand("convert", "re-express F in another basis");
    cmd_convert->add_option("--to", to_spec, "target basis spec")->required();
    for (auto* sub : {cmd_matrix, cmd_subres, cmd_chain, cmd_gcd, cmd_convert}) sub->fallthrough();
    app.require_subcommand(0, 1);

    CLI11_PARSE(app, argc, argv);

    const auto format =
        format_str == "json" ? bezsub::OutputFormat::json : bezsub::OutputFormat::text;

    try {
        bezsub::JobSpec job;
        if (!input_file.empty()) {
            if (app.get_subcommands().size() > 0)
                throw bezsub::Error(bezsub::ErrorCode::parse,
                                    "--input replaces the subcommand; give one or the other");
            job = bezsub::parse_job(read_file(input_file), format);
        } else {
            if (app.get_subcommands().empty())
                throw bezsub::Error(bezsub::ErrorCode::parse, "a subcommand or --input is required");
            if (basis_spec.empty())
                throw bezsub::Error(bezsub::ErrorCode::parse, "--basis is required");
            if (f_str.empty())
                throw bezsub::Error(bezsub::ErrorCode::parse, "--f is required");
            job.format = format;
            job.basis = bezsub::parse_basis_spec(basis_spec);
            job.f = bezsub::parse_rational_list(f_str);
            if (cmd_convert->parsed()) {
                job.command = bezsub::Command::convert;
                job.convert_to = bezsub::parse_basis_spec(to_spec);
            } else {
                if (g_str.empty())
                    throw bezsub::Error(bezsub::ErrorCode::parse, "--g is required");
                job.g = bezsub::parse_rational_list(g_str);
                if (cmd_matrix->parsed()) job.command = bezsub::Command::matrix;
                if (cmd_subres->parsed()) {
                    job.command = bezsub::Command::subres;
                    job.k = k;
                }
                if (cmd_chain->parsed()) job.command = bezsub::Command::chain;
                if (cmd_gcd->parsed()) {
                    job.command = bezsub::Command::gcd;
                    job.monic = monic;
                }
            }
        }
        std::cout << bezsub::run_job(job);
        return 0;
    } catch (const bezsub::Error& e) {
        std::cout << bezsub::render_error(e, format);
        return 1;
    }
}
