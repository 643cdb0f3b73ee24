#include "msc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "msc/canonical.hpp"
#include "msc/experiments.hpp"
#include "msc/morphisms.hpp"
#include "msc/oracle.hpp"

namespace msc::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string token_of(const nlohmann::json& value, const std::string& where) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return value.dump();
    parse_fail(where, "expected a scalar token (string or integer), got " + std::string(value.type_name()));
}

}  // namespace

FieldDescriptor default_field() {
    const char* env = std::getenv(kDefaultFieldEnv);
    if (env == nullptr || *env == '\0') return FieldDescriptor::rationals();
    return FieldDescriptor::parse(env);
}

MscDocument parse_msc(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object()) parse_fail("document", "top level must be a map");
    for (const auto& [key, value] : doc.items()) {
        if (key != "field" && key != "n" && key != "entries" && key != "label") parse_fail(key, "unknown key");
    }

    FieldDescriptor field = default_field();
    if (doc.contains("field")) {
        if (!doc["field"].is_string()) parse_fail("field", "must be a string \"Q\" or \"GF(p)\"");
        field = FieldDescriptor::parse(doc["field"].get<std::string>());
    }

    if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
        parse_fail("n", "must be a positive integer");
    }
    const std::size_t n = doc["n"].get<std::size_t>();

    if (!doc.contains("entries") || !doc["entries"].is_array()) parse_fail("entries", "must be a list of rows");
    const nlohmann::json& rows = doc["entries"];
    if (rows.size() != n) parse_fail("entries", "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));

    Matrix data(n, n * n, field);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string row_where = "entries[" + std::to_string(r) + "]";
        if (!rows[r].is_array() || rows[r].size() != n * n) {
            parse_fail(row_where, "expected a row of " + std::to_string(n * n) + " tokens");
        }
        for (std::size_t c = 0; c < n * n; ++c) {
            const std::string where = row_where + "[" + std::to_string(c) + "]";
            const std::string token = token_of(rows[r][c], where);
            try {
                data.set(r, c, Scalar::parse(field, token));
            } catch (const Error& e) {
                throw Error(e.kind(), where + ": " + e.what());
            }
        }
    }

    MscDocument out{StructureMatrix(std::move(data)), std::nullopt};
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) parse_fail("label", "must be a string");
        out.label = doc["label"].get<std::string>();
    }
    return out;
}

MscDocument load_msc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_msc(buf.str());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json msc_to_json(const MscDocument& doc) {
    json out;
    out["field"] = doc.msc.field().to_string();
    out["n"] = doc.msc.dim();
    out["entries"] = matrix_to_json(doc.msc.data());
    if (doc.label) out["label"] = *doc.label;
    return out;
}

std::string emit_msc(const MscDocument& doc) { return msc_to_json(doc).dump(2) + "\n"; }

namespace {

json tool_header(const std::string& command) {
    json out;
    out["tool"] = {{"name", kToolName}, {"version", kVersion}};
    out["command"] = command;
    return out;
}

json input_summary(const MscDocument& doc) {
    json out;
    out["label"] = doc.label ? json(*doc.label) : json(nullptr);
    out["field"] = doc.msc.field().to_string();
    out["n"] = doc.msc.dim();
    out["msc"] = matrix_to_json(doc.msc.data());
    return out;
}

json invariants_to_json(const InvariantReport& r) {
    json out;
    out["B"] = matrix_to_json(r.b);
    out["B_op"] = matrix_to_json(r.b_op);
    out["det_B"] = r.det_b.to_string();
    out["M"] = r.m ? matrix_to_json(*r.m) : json(nullptr);
    out["P"] = r.p ? matrix_to_json(*r.p) : json(nullptr);
    out["det_P"] = r.det_p ? json(r.det_p->to_string()) : json(nullptr);
    out["in_a0"] = r.in_a0;
    out["p_invertible"] = r.p_invertible;
    return out;
}

json canonical_to_json(const CanonicalForm& c) {
    return {{"P", matrix_to_json(c.source_p)}, {"canonical", matrix_to_json(c.msc.data())}};
}

std::string fraction(std::uint64_t num, std::uint64_t den) {
    return Scalar(FieldDescriptor::rationals(), mpq_class(mpz_class(num), mpz_class(den))).to_string();
}

json density_to_json(const DensityEstimate& d) {
    json out;
    out["n"] = d.n;
    out["p"] = d.p;
    out["samples"] = d.samples;
    out["seed"] = d.exhaustive ? json(nullptr) : json(d.seed);
    out["exhaustive"] = d.exhaustive;
    out["generator"] = d.exhaustive ? json("exhaustive") : json("xorshift64*");
    out["count_in_a0"] = d.count_in_a0;
    out["count_p_invertible"] = d.count_p_invertible;
    out["fraction_in_a0"] = fraction(d.count_in_a0, d.samples);
    out["fraction_p_invertible"] = fraction(d.count_p_invertible, d.samples);
    return out;
}

// Raised by a command when the mathematics declines; the partial report is kept.
struct Refusal {
    ErrorKind kind;
    std::string message;
};

int emit(std::ostream& out, json& report, const std::optional<Refusal>& refusal) {
    if (refusal) {
        report["status"] = "refused";
        report["refusal"] = std::string(to_string(refusal->kind));
        report["message"] = refusal->message;
    } else {
        report["status"] = "ok";
    }
    out << report.dump(2) << "\n";
    return refusal ? kRefused : kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification of n-dimensional algebras by their matrix of structure constants", std::string(kToolName)};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string file_a, file_b, field_text;
    std::size_t n = 0;
    std::uint32_t p = 0;
    std::uint64_t samples = 0, seed = 0;
    bool exhaustive = false;

    auto* member = app.add_subcommand("member", "Killing forms, P(A) and strata membership");
    member->add_option("file", file_a, "MSC document")->required();
    auto* canon = app.add_subcommand("canon", "Canonical form P(A) A (P(A)^-1 (x) P(A)^-1)");
    canon->add_option("file", file_a, "MSC document")->required();
    auto* iso = app.add_subcommand("iso", "Isomorphism decision with certificate");
    iso->add_option("file_a", file_a, "MSC document")->required();
    iso->add_option("file_b", file_b, "MSC document")->required();
    auto* aut = app.add_subcommand("aut", "Automorphism group");
    aut->add_option("file", file_a, "MSC document")->required();
    auto* der = app.add_subcommand("der", "Derivation space");
    der->add_option("file", file_a, "MSC document")->required();
    auto* oracle_iso = app.add_subcommand("oracle-iso", "Brute-force orbit equivalence over GF(p)");
    oracle_iso->add_option("file_a", file_a, "MSC document")->required();
    oracle_iso->add_option("file_b", file_b, "MSC document")->required();
    auto* oracle_aut = app.add_subcommand("oracle-aut", "Brute-force automorphisms over GF(p)");
    oracle_aut->add_option("file", file_a, "MSC document")->required();
    auto* witness = app.add_subcommand("witness", "Inductive construction of an algebra with det P != 0");
    witness->add_option("--n", n, "Dimension (>= 2)")->required();
    witness->add_option("--field", field_text, "\"Q\" or \"GF(p)\"; default from MSC_DEFAULT_FIELD");
    auto* density = app.add_subcommand("density", "Strata frequencies over GF(p)");
    density->add_option("--n", n, "Dimension")->required();
    density->add_option("--p", p, "Prime modulus")->required();
    density->add_option("--samples", samples, "Number of sampled MSCs (>= 1)");
    density->add_option("--seed", seed, "Generator seed");
    density->add_flag("--exhaustive", exhaustive, "Enumerate all p^(n^3) MSCs instead of sampling");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    json report;
    std::optional<Refusal> refusal;
    try {
        if (member->parsed()) {
            const MscDocument doc = load_msc(file_a);
            report = tool_header("member");
            report["input"] = input_summary(doc);
            const InvariantReport r = membership(doc.msc);
            report["invariants"] = invariants_to_json(r);
            if (!r.in_a0) {
                refusal = Refusal{ErrorKind::NotInA0, "det B(A) = 0"};
            } else if (!r.p_invertible) {
                refusal = Refusal{ErrorKind::PSingular, "det P(A) = 0"};
            }
        } else if (canon->parsed()) {
            const MscDocument doc = load_msc(file_a);
            report = tool_header("canon");
            report["input"] = input_summary(doc);
            report["result"] = canonical_to_json(canonical_form(doc.msc));
        } else if (iso->parsed()) {
            const MscDocument a = load_msc(file_a);
            const MscDocument b = load_msc(file_b);
            report = tool_header("iso");
            report["inputs"] = json::array({input_summary(a), input_summary(b)});
            const IsomorphismResult r = is_isomorphic(a.msc, b.msc);
            report["isomorphic"] = r.isomorphic;
            report["certificate"] = r.certificate ? matrix_to_json(r.certificate->g) : json(nullptr);
            report["canonical_a"] = canonical_to_json(r.left);
            report["canonical_b"] = canonical_to_json(r.right);
        } else if (aut->parsed()) {
            const MscDocument doc = load_msc(file_a);
            report = tool_header("aut");
            report["input"] = input_summary(doc);
            const AutomorphismGroup g = automorphism_group(doc.msc);
            const bool trivial = g.status == AutomorphismGroup::Status::Trivial;
            report["group"] = trivial ? "trivial" : "unknown";
            json elements = json::array();
            for (const Matrix& e : g.elements) elements.push_back(matrix_to_json(e));
            report["elements"] = std::move(elements);
            report["proof"] = trivial ? json(g.proof_tag) : json(nullptr);
        } else if (der->parsed()) {
            const MscDocument doc = load_msc(file_a);
            report = tool_header("der");
            report["input"] = input_summary(doc);
            const DerivationSpace space = derivation_space(doc.msc);
            report["dim"] = space.dim();
            json basis = json::array();
            bool traces_vanish = true;
            for (const Matrix& d : space.basis) {
                basis.push_back(matrix_to_json(d));
                traces_vanish = traces_vanish && derivation_trace_check(doc.msc, d);
            }
            report["basis"] = std::move(basis);
            report["trace_check"] = traces_vanish;
        } else if (oracle_iso->parsed()) {
            const MscDocument a = load_msc(file_a);
            const MscDocument b = load_msc(file_b);
            report = tool_header("oracle-iso");
            report["inputs"] = json::array({input_summary(a), input_summary(b)});
            const auto cert = orbit_equivalent_bruteforce(a.msc, b.msc);
            report["equivalent"] = cert.has_value();
            report["certificate"] = cert ? matrix_to_json(cert->g) : json(nullptr);
        } else if (oracle_aut->parsed()) {
            const MscDocument doc = load_msc(file_a);
            report = tool_header("oracle-aut");
            report["input"] = input_summary(doc);
            const std::vector<Matrix> all = automorphisms_bruteforce(doc.msc);
            report["count"] = all.size();
            json elements = json::array();
            for (const Matrix& e : all) elements.push_back(matrix_to_json(e));
            report["automorphisms"] = std::move(elements);
        } else if (witness->parsed()) {
            const FieldDescriptor field = field_text.empty() ? default_field() : FieldDescriptor::parse(field_text);
            report = tool_header("witness");
            report["n"] = n;
            report["field"] = field.to_string();
            const Witness w = witness_construct(n, field);
            const InvariantReport r = membership(w.msc);
            report["msc"] = matrix_to_json(w.msc.data());
            report["det_B"] = r.det_b.to_string();
            report["det_P"] = r.det_p ? json(r.det_p->to_string()) : json(nullptr);
            json steps = json::array();
            for (const WitnessStep& s : w.trace.steps) {
                steps.push_back({{"dim", s.dim},
                                 {"X", matrix_to_json(s.x)},
                                 {"t", s.t.to_string()},
                                 {"det_B", s.det_b.to_string()},
                                 {"det_P", s.det_p.to_string()},
                                 {"B_block_identity", s.killing_left_block_identity},
                                 {"B_op_block_identity", s.killing_right_block_identity}});
            }
            report["trace"] = {{"base", matrix_to_json(w.trace.base.data())}, {"steps", std::move(steps)}};
        } else if (density->parsed()) {
            report = tool_header("density");
            if (exhaustive) {
                report["estimate"] = density_to_json(density_exhaustive(n, p));
            } else {
                if (samples == 0) throw Error(ErrorKind::InvalidArgument, "--samples must be >= 1 unless --exhaustive");
                report["estimate"] = density_to_json(density_estimate(n, p, samples, seed));
            }
        }
    } catch (const Error& e) {
        if (!is_domain_refusal(e.kind())) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
        if (report.is_null()) report = tool_header(app.get_subcommands().front()->get_name());
        refusal = Refusal{e.kind(), e.what()};
    }
    return emit(out, report, refusal);
}

}  // namespace msc::cli
