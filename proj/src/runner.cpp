#include "paramweyl/runner.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "paramweyl/errors.hpp"
#include "paramweyl/groebner.hpp"
#include "paramweyl/oracle.hpp"
#include "paramweyl/parser.hpp"
#include "paramweyl/primary.hpp"

namespace paramweyl {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    std::size_t head = s.find_first_not_of(" \t");
    if (head == std::string::npos) return "";
    std::size_t tail = s.find_last_not_of(" \t");
    return s.substr(head, tail - head + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            std::string piece = trim(s.substr(start, i - start));
            if (!piece.empty()) out.push_back(piece);
            start = i + 1;
        }
    }
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

const LeftIdealPresentation& resolve_ideal(const Document& doc,
                                           const RunOptions& opts) {
    if (!opts.ideal.empty()) return doc.ideal(opts.ideal);
    if (doc.ideals.size() == 1) return doc.ideals.front().second;
    if (doc.ideals.empty()) throw UsageError("document has no ideal block");
    throw UsageError("document has " + std::to_string(doc.ideals.size()) +
                     " ideal blocks; select one with --ideal");
}

CommIdeal resolve_prime(const Document& doc, const RunOptions& opts) {
    if (opts.prime.empty()) {
        if (doc.primes.size() == 1) return doc.primes.front().second;
        if (doc.primes.empty()) throw UsageError("document has no prime block");
        throw UsageError("document has " + std::to_string(doc.primes.size()) +
                         " prime blocks; select one with --prime");
    }
    if (doc.has_prime(opts.prime)) return doc.prime(opts.prime);
    if (std::ifstream(opts.prime).good()) {
        Document other = parse_document_file(opts.prime);
        if (other.n != doc.n || other.p != doc.p)
            throw UsageError("variable counts in '" + opts.prime +
                             "' (n=" + std::to_string(other.n) +
                             ", p=" + std::to_string(other.p) +
                             ") do not match the document (n=" +
                             std::to_string(doc.n) +
                             ", p=" + std::to_string(doc.p) + ")");
        if (other.primes.empty())
            throw UsageError("file '" + opts.prime + "' has no prime block");
        return other.primes.front().second;
    }
    throw UsageError("no prime named '" + opts.prime + "' and no such file");
}

RationalPoint resolve_point_text(const Document& doc, const std::string& text) {
    if (doc.has_point(text)) return doc.point(text);
    return parse_rational_point(text, doc.p);
}

RationalPoint resolve_point(const Document& doc, const RunOptions& opts) {
    if (opts.point.empty()) {
        if (doc.points.size() == 1) return doc.points.front().second;
        if (doc.points.empty())
            throw UsageError("document has no point block; pass --point");
        throw UsageError("document has " + std::to_string(doc.points.size()) +
                         " point blocks; select one with --point");
    }
    return resolve_point_text(doc, opts.point);
}

CommIdeal resolve_comm_ideal(const Document& doc, const std::string& name) {
    if (doc.has_prime(name)) return doc.prime(name);
    if (doc.has_ideal(name)) {
        const LeftIdealPresentation& J = doc.ideal(name);
        std::vector<CommPoly> gens;
        for (const auto& g : J.generators) {
            if (!g.in_a())
                throw UsageError("ideal '" + name +
                                 "' has a generator outside the s variables; "
                                 "components must be ideals of A");
            gens.push_back(g.to_comm());
        }
        return CommIdeal(doc.n, doc.p, std::move(gens));
    }
    throw UsageError("no prime or ideal named '" + name + "'");
}

std::vector<PrimaryComponentInput> resolve_components(const Document& doc,
                                                      const RunOptions& opts) {
    if (opts.components.empty())
        throw UsageError("pass --components \"q1:p1,q2:p2,...\"");
    std::vector<PrimaryComponentInput> out;
    for (const std::string& pair : split(opts.components, ',')) {
        std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
            throw UsageError("component '" + pair +
                             "' is not of the form q:p");
        const std::string q_name = trim(pair.substr(0, colon));
        const std::string p_name = trim(pair.substr(colon + 1));
        if (q_name.empty() || p_name.empty())
            throw UsageError("component '" + pair +
                             "' is not of the form q:p");
        out.emplace_back(resolve_comm_ideal(doc, q_name),
                         resolve_comm_ideal(doc, p_name));
    }
    return out;
}

struct SampleSpec {
    std::vector<RationalPoint> points;
    std::size_t want = 0;
};

SampleSpec resolve_samples(const Document& doc, const RunOptions& opts) {
    SampleSpec out;
    if (all_digits(opts.samples)) {
        out.want = std::stoul(opts.samples);
        return out;
    }
    for (const std::string& piece : split(opts.samples, ';'))
        out.points.push_back(resolve_point_text(doc, piece));
    if (out.points.empty())
        throw UsageError("--samples must be a count or a ';'-separated "
                         "point list");
    return out;
}

json point_json(const RationalPoint& pt) {
    json arr = json::array();
    for (const auto& c : pt.coords) arr.push_back(rat_to_string(c));
    return arr;
}

std::string join_polys(const std::vector<CommPoly>& polys) {
    std::string out;
    for (const auto& g : polys) {
        if (!out.empty()) out += "; ";
        out += g.to_string();
    }
    return out;
}

std::string join_ops(const std::vector<WeylOperator>& ops) {
    std::string out;
    for (const auto& g : ops) {
        if (!out.empty()) out += "; ";
        out += g.to_string();
    }
    return out;
}

json new_payload(const std::string& command) {
    json j;
    j["format"] = 1;
    j["command"] = command;
    return j;
}

std::string basis_lines(const std::vector<WeylOperator>& elements) {
    std::string out;
    for (const auto& g : elements) out += g.to_string() + "\n";
    return out;
}

// The J + R*prime pipeline behind h-poly, specialize, and dense-open.
GroebnerBasisR fiber_basis(const LeftIdealPresentation& J,
                           const CommIdeal& prime) {
    std::vector<WeylOperator> gens = J.generators;
    for (const auto& g : prime.gens())
        gens.push_back(WeylOperator::from_comm(g));
    return reduce_gb(
        buchberger_r(LeftIdealPresentation(J.n, J.p, std::move(gens)), true));
}

std::string cmd_gb(const Document& doc, const RunOptions& opts) {
    const GroebnerBasisR gb = buchberger_r(resolve_ideal(doc, opts), opts.certify);
    if (!opts.json) return basis_lines(gb.elements);
    json j = new_payload("gb");
    j["certified"] = gb.certified;
    j["basis"] = json::array();
    for (const auto& g : gb.elements) j["basis"].push_back(g.to_string());
    return j.dump() + "\n";
}

std::string cmd_eliminate(const Document& doc, const RunOptions& opts) {
    const CommIdeal ideal =
        eliminate_to_a(buchberger_r(resolve_ideal(doc, opts), true));
    if (!opts.json) {
        std::string out;
        for (const auto& g : ideal.gens()) out += g.to_string() + "\n";
        return out;
    }
    json j = new_payload("eliminate");
    j["generators"] = json::array();
    for (const auto& g : ideal.gens()) j["generators"].push_back(g.to_string());
    return j.dump() + "\n";
}

std::string cmd_reduce_gb(const Document& doc, const RunOptions& opts) {
    const GroebnerBasisR gb =
        reduce_gb(buchberger_r(resolve_ideal(doc, opts), true));
    if (!opts.json) return basis_lines(gb.elements);
    json j = new_payload("reduce-gb");
    j["certified"] = gb.certified;
    j["basis"] = json::array();
    for (const auto& g : gb.elements) j["basis"].push_back(g.to_string());
    return j.dump() + "\n";
}

std::string cmd_h_poly(const Document& doc, const RunOptions& opts) {
    const CommIdeal prime = resolve_prime(doc, opts);
    const CommPoly h =
        h_polynomial(fiber_basis(resolve_ideal(doc, opts), prime), prime);
    if (!opts.json) return h.to_string() + "\n";
    json j = new_payload("h-poly");
    j["h"] = h.to_string();
    return j.dump() + "\n";
}

std::string cmd_specialize(const Document& doc, const RunOptions& opts) {
    const CommIdeal prime = resolve_prime(doc, opts);
    const RationalPoint alpha = resolve_point(doc, opts);
    const GroebnerBasisR gb = specialize_gb(
        fiber_basis(resolve_ideal(doc, opts), prime), prime, alpha);
    if (!opts.json) return basis_lines(gb.elements);
    json j = new_payload("specialize");
    j["point"] = point_json(alpha);
    j["certified"] = gb.certified;
    j["basis"] = json::array();
    for (const auto& g : gb.elements) j["basis"].push_back(g.to_string());
    return j.dump() + "\n";
}

std::string cmd_fiber_check(const Document& doc, const RunOptions& opts) {
    const RationalPoint alpha = resolve_point(doc, opts);
    const bool nonzero =
        fiber_nonzero(resolve_ideal(doc, opts), alpha, opts.certify);
    if (!opts.json) return std::string(nonzero ? "NONZERO" : "ZERO") + "\n";
    json j = new_payload("fiber-check");
    j["point"] = point_json(alpha);
    j["nonzero"] = nonzero;
    return j.dump() + "\n";
}

std::string cmd_dense_open(const Document& doc, const RunOptions& opts) {
    const CommIdeal prime = resolve_prime(doc, opts);
    const SampleSpec spec = resolve_samples(doc, opts);
    const FiberCertificate cert =
        dense_open_certificate(resolve_ideal(doc, opts), prime, spec.points,
                               spec.want, opts.certify);
    if (!opts.json) {
        std::string out = "prime: " + join_polys(cert.prime.gens()) + "\n";
        out += "h: " + cert.h.to_string() + "\n";
        out += "basis: " + join_ops(cert.basis.elements) + "\n";
        for (const auto& s : cert.samples) {
            out += "sample " + s.point.to_string() + ": ";
            if (s.admissible)
                out += s.fiber ? "NONZERO" : "ZERO";
            else
                out += "skipped (" + s.skip_reason + ")";
            out += "\n";
        }
        out += "verified: " + std::to_string(cert.verified) + "\n";
        return out;
    }
    json j = new_payload("dense-open");
    j["prime"] = json::array();
    for (const auto& g : cert.prime.gens()) j["prime"].push_back(g.to_string());
    j["h"] = cert.h.to_string();
    j["basis"] = json::array();
    for (const auto& g : cert.basis.elements) j["basis"].push_back(g.to_string());
    j["samples"] = json::array();
    for (const auto& s : cert.samples) {
        json entry;
        entry["point"] = point_json(s.point);
        entry["admissible"] = s.admissible;
        if (s.admissible)
            entry["nonzero"] = s.fiber;
        else
            entry["skipped"] = s.skip_reason;
        j["samples"].push_back(entry);
    }
    j["verified"] = cert.verified;
    return j.dump() + "\n";
}

std::string cmd_lemma21(const Document& doc, const RunOptions& opts) {
    std::vector<PrimaryComponentInput> comps = resolve_components(doc, opts);
    if (comps.size() != 1)
        throw UsageError("lemma21 takes exactly one q:p component");
    const CommPoly f = primary_multiplier(comps.front(), opts.k_cap);
    if (!opts.json) return f.to_string() + "\n";
    json j = new_payload("lemma21");
    j["f"] = f.to_string();
    return j.dump() + "\n";
}

std::string cmd_thm22_h(const Document& doc, const RunOptions& opts) {
    std::vector<PrimaryComponentInput> comps = resolve_components(doc, opts);
    if (opts.index < 1 || opts.index > comps.size())
        throw UsageError("--index " + std::to_string(opts.index) +
                         " is out of range; the list has " +
                         std::to_string(comps.size()) + " components");
    const RadicalMultiplierResult res =
        radical_multiplier(comps, opts.index - 1, opts.k_cap);
    if (!opts.json) {
        std::string out = "h: " + res.h.to_string() + "\n";
        if (res.g) out += "g: " + res.g->to_string() + "\n";
        if (res.f) out += "f: " + res.f->to_string() + "\n";
        if (res.single_component) out += "single_component_extension: true\n";
        return out;
    }
    json j = new_payload("thm22-h");
    j["h"] = res.h.to_string();
    if (res.g) j["g"] = res.g->to_string();
    if (res.f) j["f"] = res.f->to_string();
    j["single_component_extension"] = res.single_component;
    return j.dump() + "\n";
}

std::string cmd_verify_lemma24(const Document& doc, const RunOptions& opts,
                               int& exit_code) {
    const CommIdeal prime = resolve_prime(doc, opts);
    const ContractionCheck chk =
        verify_prime_contraction(resolve_ideal(doc, opts), prime);
    if (!chk.ok) exit_code = 1;
    if (!opts.json) {
        std::string out;
        if (chk.ok) {
            out = "OK: (J + R*prime) cap A = prime\n";
        } else {
            out = "FAIL: (J + R*prime) cap A != prime\n";
            out += "witness: " + chk.witness->to_string() + " (" + chk.detail +
                   ")\n";
        }
        out += "contraction: " + join_polys(chk.contraction) + "\n";
        return out;
    }
    json j = new_payload("verify-lemma24");
    j["ok"] = chk.ok;
    j["contraction"] = json::array();
    for (const auto& g : chk.contraction) j["contraction"].push_back(g.to_string());
    if (!chk.ok) {
        j["witness"] = chk.witness->to_string();
        j["detail"] = chk.detail;
    }
    return j.dump() + "\n";
}

std::string cmd_oracle_member(const Document& doc, const RunOptions& opts) {
    if (opts.target.empty())
        throw UsageError("oracle-member requires --target <expression>");
    const LeftIdealPresentation& J = resolve_ideal(doc, opts);
    const WeylOperator target = parse_operator(opts.target, doc.n, doc.p);
    const OracleResult res =
        bounded_membership(target, J.generators, opts.max_degree);
    if (!opts.json) {
        if (!res.in()) return "NOT-WITHIN-BOUND\n";
        std::string out = "IN\n";
        for (std::size_t i = 0; i < res.cofactors.size(); ++i)
            out += "cofactor " + std::to_string(i + 1) + ": " +
                   res.cofactors[i].to_string() + "\n";
        return out;
    }
    json j = new_payload("oracle-member");
    j["verdict"] = res.in() ? "IN" : "NOT-WITHIN-BOUND";
    if (res.in()) {
        j["cofactors"] = json::array();
        for (const auto& c : res.cofactors) j["cofactors"].push_back(c.to_string());
    }
    return j.dump() + "\n";
}

std::string dispatch(const std::string& command, const Document& doc,
                     const RunOptions& opts, int& exit_code) {
    if (command == "gb") return cmd_gb(doc, opts);
    if (command == "eliminate") return cmd_eliminate(doc, opts);
    if (command == "reduce-gb") return cmd_reduce_gb(doc, opts);
    if (command == "h-poly") return cmd_h_poly(doc, opts);
    if (command == "specialize") return cmd_specialize(doc, opts);
    if (command == "fiber-check") return cmd_fiber_check(doc, opts);
    if (command == "dense-open") return cmd_dense_open(doc, opts);
    if (command == "lemma21") return cmd_lemma21(doc, opts);
    if (command == "thm22-h") return cmd_thm22_h(doc, opts);
    if (command == "verify-lemma24")
        return cmd_verify_lemma24(doc, opts, exit_code);
    if (command == "oracle-member") return cmd_oracle_member(doc, opts);
    throw UsageError("unknown command '" + command + "'");
}

} // namespace

RunResult run_command(const std::string& command, const Document& doc,
                      const RunOptions& opts) {
    RunResult out;
    try {
        out.output = dispatch(command, doc, opts, out.exit_code);
    } catch (const ParseError& e) {
        out.exit_code = 2;
        out.error = std::string("error: ") + e.what();
    } catch (const UsageError& e) {
        out.exit_code = 2;
        out.error = std::string("error: ") + e.what();
    } catch (const Error& e) {
        out.exit_code = 1;
        out.error = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
        out.exit_code = 1;
        out.error = std::string("error: ") + e.what();
    }
    return out;
}

} // namespace paramweyl
