#pragma once

#include <string>
#include <vector>

#include "bezsub/basis.hpp"
#include "bezsub/error.hpp"
#include "bezsub/rational.hpp"

namespace bezsub {

enum class Command { matrix, subres, chain, gcd, convert };
enum class OutputFormat { text, json };

/// One validated job: a basis, input coefficient vectors and a command.
/// Field names and the document schema are frozen in docs/format.md.
struct JobSpec {
    BasisPtr basis;
    std::vector<Rational> f;
    std::vector<Rational> g;    // unused by `convert`
    Command command = Command::matrix;
    int k = 0;                  // `subres` only
    bool monic = false;         // `gcd` only
    BasisPtr convert_to;        // `convert` only
    OutputFormat format = OutputFormat::text;
};

/// Compact basis spec: "power:S", "newton:N1,N2,...", or
/// "custom:C00;C10,C11;..." (one ';'-separated ascending coefficient list
/// per basis polynomial).
BasisPtr parse_basis_spec(const std::string& spec);

/// Renders a basis back into the compact spec syntax.
std::string basis_spec_string(const GeneralBasis& basis);

/// Comma-separated exact rationals ("1,1,1,1" or "1/2,-3").
std::vector<Rational> parse_rational_list(const std::string& text);

/// Parses and validates a JSON job document. Unknown fields are ignored,
/// so a structured output document is itself a valid input document.
JobSpec parse_job(const std::string& document, OutputFormat format = OutputFormat::text);

/// Runs the job and renders the output document (text or JSON per the job's
/// format). JSON output echoes the job fields ahead of the results, making
/// the output re-runnable; reruns are byte-identical.
std::string run_job(const JobSpec& job);

/// Error document in the requested format ("error": {code, message}).
std::string render_error(const Error& error, OutputFormat format);

}  // namespace bezsub
