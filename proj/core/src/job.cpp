#include "bezsub/job.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "bezsub/bezout.hpp"
#include "bezsub/polynomial.hpp"
#include "bezsub/subres.hpp"

namespace bezsub {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* command_name(Command c) {
    switch (c) {
        case Command::matrix: return "matrix";
        case Command::subres: return "subres";
        case Command::chain: return "chain";
        case Command::gcd: return "gcd";
        case Command::convert: return "convert";
    }
    return "?";
}

Command command_from_name(const std::string& name) {
    if (name == "matrix") return Command::matrix;
    if (name == "subres") return Command::subres;
    if (name == "chain") return Command::chain;
    if (name == "gcd") return Command::gcd;
    if (name == "convert") return Command::convert;
    throw Error(ErrorCode::parse, "unknown command '" + name + "'");
}

Rational rational_from_json(const ordered_json& v, const std::string& where) {
    if (!v.is_string())
        throw Error(ErrorCode::parse, where + ": rational values must be strings");
    return Rational::from_string(v.get<std::string>());
}

std::vector<Rational> rational_list_from_json(const ordered_json& v, const std::string& where) {
    if (!v.is_array()) throw Error(ErrorCode::parse, where + " must be an array");
    std::vector<Rational> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(rational_from_json(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

BasisPtr basis_from_json(const ordered_json& v, const std::string& where) {
    if (!v.is_object()) throw Error(ErrorCode::parse, where + " must be an object");
    if (!v.contains("kind") || !v["kind"].is_string())
        throw Error(ErrorCode::parse, where + ".kind must be a string");
    const std::string kind = v["kind"].get<std::string>();
    if (kind == "power") {
        if (!v.contains("size") || !v["size"].is_number_integer())
            throw Error(ErrorCode::parse, where + ".size must be an integer");
        return make_power_basis(v["size"].get<int>());
    }
    if (kind == "newton") {
        if (!v.contains("nodes"))
            throw Error(ErrorCode::parse, where + ".nodes is required for a newton basis");
        return make_newton_basis(rational_list_from_json(v["nodes"], where + ".nodes"));
    }
    if (kind == "custom") {
        if (!v.contains("omegas") || !v["omegas"].is_array())
            throw Error(ErrorCode::parse, where + ".omegas must be an array of arrays");
        std::vector<std::vector<Rational>> omegas;
        for (size_t i = 0; i < v["omegas"].size(); ++i)
            omegas.push_back(rational_list_from_json(
                v["omegas"][i], where + ".omegas[" + std::to_string(i) + "]"));
        return make_custom_basis(omegas);
    }
    throw Error(ErrorCode::parse, where + ".kind must be power, newton, or custom");
}

ordered_json rational_list_json(const std::vector<Rational>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

ordered_json basis_json(const GeneralBasis& basis) {
    ordered_json obj;
    switch (basis.kind()) {
        case BasisKind::power:
            obj["kind"] = "power";
            obj["size"] = basis.size();
            break;
        case BasisKind::newton:
            obj["kind"] = "newton";
            obj["nodes"] = rational_list_json(basis.nodes());
            break;
        case BasisKind::custom: {
            obj["kind"] = "custom";
            ordered_json omegas = ordered_json::array();
            for (const auto& w : basis.omegas()) {
                std::vector<Rational> c = w.coeffs();
                if (c.empty()) c.emplace_back(0);
                omegas.push_back(rational_list_json(c));
            }
            obj["omegas"] = std::move(omegas);
            break;
        }
    }
    return obj;
}

std::vector<Rational> padded(std::vector<Rational> values, size_t len) {
    if (values.size() < len) values.resize(len, Rational(0));
    return values;
}

std::vector<Rational> power_coeffs(const Polynomial& p) {
    return padded(p.coeffs(), 1);
}

std::string join(const std::vector<Rational>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i].str();
    }
    return os.str();
}

void validate(const JobSpec& job) {
    const auto df = degree(PolyInBasis{job.basis, job.f});
    const auto dg = degree(PolyInBasis{job.basis, job.g});
    const int size = job.basis->size();
    if (df && *df > size)
        throw Error(ErrorCode::range, "f: degree " + std::to_string(*df) +
                                          " exceeds basis size " + std::to_string(size));
    if (dg && *dg > size)
        throw Error(ErrorCode::range, "g: degree " + std::to_string(*dg) +
                                          " exceeds basis size " + std::to_string(size));
    switch (job.command) {
        case Command::matrix:
            if (!df || *df < 1) throw Error(ErrorCode::degree, "matrix requires deg f >= 1");
            if (dg > df) throw Error(ErrorCode::degree, "matrix requires deg g <= deg f");
            break;
        case Command::subres:
        case Command::chain:
        case Command::gcd:
            if (!df || *df < 1)
                throw Error(ErrorCode::degree, "subresultants require deg f >= 1");
            if (!dg)
                throw Error(ErrorCode::degree, "subresultants require g != 0");
            if (dg >= df)
                throw Error(ErrorCode::degree, "subresultants require deg f > deg g");
            if (job.command == Command::subres && (job.k < 0 || job.k > *dg))
                throw Error(ErrorCode::range, "k must satisfy 0 <= k <= deg g");
            break;
        case Command::convert:
            if (df && *df > job.convert_to->size())
                throw Error(ErrorCode::range, "f: degree exceeds the target basis size");
            break;
    }
}

}  // namespace

BasisPtr parse_basis_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::parse, "basis spec '" + spec + "' needs kind:args");
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (kind == "power") {
        try {
            size_t used = 0;
            const int s = std::stoi(args, &used);
            if (used != args.size()) throw std::invalid_argument(args);
            return make_power_basis(s);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::parse, "power basis size '" + args + "' is not an integer");
        }
    }
    if (kind == "newton") return make_newton_basis(parse_rational_list(args));
    if (kind == "custom") {
        std::vector<std::vector<Rational>> omegas;
        std::stringstream ss(args);
        std::string part;
        while (std::getline(ss, part, ';')) omegas.push_back(parse_rational_list(part));
        return make_custom_basis(omegas);
    }
    throw Error(ErrorCode::parse, "unknown basis kind '" + kind + "'");
}

std::string basis_spec_string(const GeneralBasis& basis) {
    std::ostringstream os;
    switch (basis.kind()) {
        case BasisKind::power:
            os << "power:" << basis.size();
            break;
        case BasisKind::newton: {
            os << "newton:";
            const auto& nodes = basis.nodes();
            for (size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i].str();
            break;
        }
        case BasisKind::custom: {
            os << "custom:";
            for (int i = 0; i <= basis.size(); ++i) {
                if (i) os << ';';
                const auto& c = basis.omega(i).coeffs();
                for (size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j].str();
            }
            break;
        }
    }
    return os.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(Rational::from_string(part));
    if (out.empty()) throw Error(ErrorCode::parse, "empty coefficient list");
    return out;
}

JobSpec parse_job(const std::string& document, OutputFormat format) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::parse, "job document must be an object");
    if (!doc.contains("command") || !doc["command"].is_string())
        throw Error(ErrorCode::parse, "command must be a string");
    if (!doc.contains("basis")) throw Error(ErrorCode::parse, "basis is required");
    if (!doc.contains("f")) throw Error(ErrorCode::parse, "f is required");

    JobSpec job;
    job.format = format;
    job.command = command_from_name(doc["command"].get<std::string>());
    job.basis = basis_from_json(doc["basis"], "basis");
    job.f = rational_list_from_json(doc["f"], "f");

    if (job.command == Command::convert) {
        if (!doc.contains("to")) throw Error(ErrorCode::parse, "to is required for convert");
        job.convert_to = basis_from_json(doc["to"], "to");
    } else {
        if (!doc.contains("g")) throw Error(ErrorCode::parse, "g is required");
        job.g = rational_list_from_json(doc["g"], "g");
    }
    if (job.command == Command::subres) {
        if (!doc.contains("k") || !doc["k"].is_number_integer())
            throw Error(ErrorCode::parse, "k must be an integer for subres");
        job.k = doc["k"].get<int>();
    }
    if (job.command == Command::gcd && doc.contains("monic")) {
        if (!doc["monic"].is_boolean()) throw Error(ErrorCode::parse, "monic must be a boolean");
        job.monic = doc["monic"].get<bool>();
    }
    validate(job);
    return job;
}

std::string run_job(const JobSpec& job) {
    validate(job);
    const PolyInBasis f{job.basis, job.f};
    const PolyInBasis g{job.basis, job.g};

    ordered_json out;
    out["basis"] = basis_json(*job.basis);
    out["f"] = rational_list_json(trimmed(f).coeffs);
    if (job.command != Command::convert) out["g"] = rational_list_json(trimmed(g).coeffs);
    if (job.command == Command::convert) out["to"] = basis_json(*job.convert_to);
    out["command"] = command_name(job.command);

    std::ostringstream text;
    text << "command " << command_name(job.command) << "\n"
         << "basis " << basis_spec_string(*job.basis) << "\n"
         << "f " << join(trimmed(f).coeffs) << "\n";
    if (job.command != Command::convert) text << "g " << join(trimmed(g).coeffs) << "\n";
    if (job.command == Command::convert)
        text << "to " << basis_spec_string(*job.convert_to) << "\n";

    switch (job.command) {
        case Command::matrix: {
            const BezoutMatrix b = bezout_matrix_general(f, g);
            ordered_json rows = ordered_json::array();
            text << "matrix " << b.n << "x" << b.n << "\n";
            for (int r = 0; r < b.n; ++r) {
                std::vector<Rational> row;
                row.reserve(static_cast<size_t>(b.n));
                for (int c = 0; c < b.n; ++c) row.push_back(b.entries.at(r, c));
                rows.push_back(rational_list_json(row));
                text << join(row) << "\n";
            }
            out["result"] = std::move(rows);
            break;
        }
        case Command::subres: {
            const PolyInBasis s = bezout_subresultant(f, g, job.k);
            const auto coeffs = padded(s.coeffs, static_cast<size_t>(job.k) + 1);
            const Polynomial power = to_power(s);
            out["k"] = job.k;
            out["result"] = rational_list_json(coeffs);
            out["power_form"] = rational_list_json(power_coeffs(power));
            text << "k " << job.k << "\n"
                 << "coeffs " << join(coeffs) << "\n"
                 << "power " << join(power_coeffs(power)) << "\n"
                 << "power_form " << power.str() << "\n";
            break;
        }
        case Command::chain: {
            const SubresultantChain chain = subresultant_chain(f, g);
            ordered_json entries = ordered_json::array();
            ordered_json powers = ordered_json::array();
            for (size_t k = 0; k < chain.polys.size(); ++k) {
                const auto coeffs = padded(chain.polys[k].coeffs, k + 1);
                entries.push_back(rational_list_json(coeffs));
                powers.push_back(rational_list_json(power_coeffs(to_power(chain.polys[k]))));
                text << "S_" << k << " " << join(coeffs) << "\n";
            }
            out["result"] = std::move(entries);
            out["principals"] = rational_list_json(chain.principals);
            out["power_form"] = std::move(powers);
            text << "principals " << join(chain.principals) << "\n";
            for (size_t k = 0; k < chain.polys.size(); ++k)
                text << "power_" << k << " " << join(power_coeffs(to_power(chain.polys[k]))) << "\n";
            break;
        }
        case Command::gcd: {
            const GcdResult r = gcd_via_subresultants(f, g);
            const auto coeffs = padded(r.gcd.coeffs, static_cast<size_t>(r.k) + 1);
            const Polynomial power = to_power(r.gcd);
            out["monic"] = job.monic;
            out["k"] = r.k;
            out["result"] = rational_list_json(coeffs);
            out["power_form"] = rational_list_json(power_coeffs(power));
            text << "monic " << (job.monic ? "true" : "false") << "\n"
                 << "k " << r.k << "\n"
                 << "coeffs " << join(coeffs) << "\n"
                 << "power " << join(power_coeffs(power)) << "\n"
                 << "power_form " << power.str() << "\n";
            if (job.monic) {
                const Rational principal = coeffs[static_cast<size_t>(r.k)];
                const auto monic_coeffs =
                    padded(scaled(r.gcd, principal.inverse()).coeffs, static_cast<size_t>(r.k) + 1);
                out["monic_gcd"] = rational_list_json(monic_coeffs);
                text << "monic_gcd " << join(monic_coeffs) << "\n"
                     << "monic_power_form " << to_power(scaled(r.gcd, principal.inverse())).str()
                     << "\n";
            }
            break;
        }
        case Command::convert: {
            const Polynomial power = to_power(f);
            const PolyInBasis res = from_power(power, job.convert_to);
            const auto coeffs = padded(res.coeffs, 1);
            out["result"] = rational_list_json(coeffs);
            out["power_form"] = rational_list_json(power_coeffs(power));
            text << "coeffs " << join(coeffs) << "\n"
                 << "power " << join(power_coeffs(power)) << "\n"
                 << "power_form " << power.str() << "\n";
            break;
        }
    }

    if (job.format == OutputFormat::json) return out.dump(2) + "\n";
    return text.str();
}

std::string render_error(const Error& error, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json out;
        out["error"]["code"] = std::string(error_code_name(error.code()));
        out["error"]["message"] = error.what();
        return out.dump(2) + "\n";
    }
    return "error " + std::string(error_code_name(error.code())) + ": " + error.what() + "\n";
}

}  // namespace bezsub
