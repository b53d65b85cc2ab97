#include "paramweyl/idealfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "paramweyl/errors.hpp"
#include "paramweyl/parser.hpp"

namespace paramweyl {

namespace {

std::string trim(const std::string& s) {
    std::size_t head = s.find_first_not_of(" \t\r");
    if (head == std::string::npos) return "";
    std::size_t tail = s.find_last_not_of(" \t\r");
    return s.substr(head, tail - head + 1);
}

std::string strip_comment(const std::string& line) {
    std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg, 0);
}

struct Block {
    std::string kind;
    std::string name;
    std::string payload;
    std::size_t line_no;
};

bool is_block_start(const std::string& line, Block& out, std::size_t line_no) {
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    if (kw != "ideal" && kw != "prime" && kw != "point") return false;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
        fail(line_no, "expected '" + kw + " <name>: <payload>'");
    std::string name = trim(line.substr(kw.size(), colon - kw.size()));
    if (name.empty()) fail(line_no, "missing " + kw + " name");
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
            fail(line_no, "invalid character in name '" + name + "'");
    out = {kw, name, trim(line.substr(colon + 1)), line_no};
    return true;
}

std::vector<std::string> split_generators(const std::string& payload) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= payload.size(); ++i) {
        if (i == payload.size() || payload[i] == ';') {
            std::string piece = trim(payload.substr(start, i - start));
            if (!piece.empty()) out.push_back(piece);
            start = i + 1;
        }
    }
    return out;
}

void parse_vars_line(const std::string& line, std::size_t line_no, Document& doc) {
    std::istringstream in(line);
    std::string kw, n_part, p_part;
    in >> kw >> n_part >> p_part;
    std::string extra;
    if (kw != "vars" || (in >> extra))
        fail(line_no, "expected 'vars n=<int> p=<int>'");
    auto read_count = [&](const std::string& part, const std::string& label) {
        if (part.size() < label.size() + 1 ||
            part.compare(0, label.size(), label) != 0 ||
            part[label.size()] != '=')
            fail(line_no, "expected 'vars n=<int> p=<int>'");
        const std::string digits = part.substr(label.size() + 1);
        if (digits.empty()) fail(line_no, "expected 'vars n=<int> p=<int>'");
        std::size_t value = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(line_no, "expected 'vars n=<int> p=<int>'");
            value = value * 10 + static_cast<std::size_t>(c - '0');
            if (value > 1000) fail(line_no, label + " is too large");
        }
        return value;
    };
    doc.n = read_count(n_part, "n");
    doc.p = read_count(p_part, "p");
}

void finish_block(const Block& block, Document& doc) {
    if (block.kind == "ideal") {
        for (const auto& [name, unused] : doc.ideals)
            if (name == block.name)
                fail(block.line_no, "duplicate ideal name '" + block.name + "'");
        std::vector<std::string> texts = split_generators(block.payload);
        if (texts.empty())
            fail(block.line_no, "ideal '" + block.name + "' has no generators");
        std::vector<WeylOperator> gens;
        for (const std::string& text : texts) {
            WeylOperator g = [&] {
                try {
                    return parse_operator(text, doc.n, doc.p);
                } catch (const ParseError& e) {
                    fail(block.line_no, std::string("in '") + text + "': " + e.what());
                }
            }();
            if (g.is_zero())
                fail(block.line_no, "zero generator in ideal '" + block.name + "'");
            gens.push_back(std::move(g));
        }
        doc.ideals.emplace_back(block.name,
                                LeftIdealPresentation(doc.n, doc.p, std::move(gens)));
        return;
    }
    if (block.kind == "prime") {
        for (const auto& [name, unused] : doc.primes)
            if (name == block.name)
                fail(block.line_no, "duplicate prime name '" + block.name + "'");
        std::vector<std::string> texts = split_generators(block.payload);
        if (texts.empty())
            fail(block.line_no, "prime '" + block.name + "' has no generators");
        std::vector<CommPoly> gens;
        for (const std::string& text : texts) {
            WeylOperator g = [&] {
                try {
                    return parse_operator(text, doc.n, doc.p);
                } catch (const ParseError& e) {
                    fail(block.line_no, std::string("in '") + text + "': " + e.what());
                }
            }();
            if (g.is_zero())
                fail(block.line_no, "zero generator in prime '" + block.name + "'");
            if (!g.in_a())
                fail(block.line_no, "prime generator '" + text +
                                        "' is not a polynomial in the s variables");
            gens.push_back(g.to_comm());
        }
        doc.primes.emplace_back(block.name,
                                CommIdeal(doc.n, doc.p, std::move(gens)));
        return;
    }
    for (const auto& [name, unused] : doc.points)
        if (name == block.name)
            fail(block.line_no, "duplicate point name '" + block.name + "'");
    RationalPoint pt = [&] {
        try {
            return parse_rational_point(block.payload, doc.p);
        } catch (const ParseError& e) {
            fail(block.line_no, e.what());
        }
    }();
    doc.points.emplace_back(block.name, std::move(pt));
}

} // namespace

const LeftIdealPresentation& Document::ideal(const std::string& name) const {
    for (const auto& [key, value] : ideals)
        if (key == name) return value;
    throw UsageError("no ideal named '" + name + "'");
}

const CommIdeal& Document::prime(const std::string& name) const {
    for (const auto& [key, value] : primes)
        if (key == name) return value;
    throw UsageError("no prime named '" + name + "'");
}

const RationalPoint& Document::point(const std::string& name) const {
    for (const auto& [key, value] : points)
        if (key == name) return value;
    throw UsageError("no point named '" + name + "'");
}

bool Document::has_ideal(const std::string& name) const {
    for (const auto& [key, unused] : ideals)
        if (key == name) return true;
    return false;
}

bool Document::has_prime(const std::string& name) const {
    for (const auto& [key, unused] : primes)
        if (key == name) return true;
    return false;
}

bool Document::has_point(const std::string& name) const {
    for (const auto& [key, unused] : points)
        if (key == name) return true;
    return false;
}

Document parse_document(const std::string& text) {
    Document doc;
    bool saw_vars = false;
    bool in_block = false;
    Block current;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (!saw_vars) {
            parse_vars_line(line, line_no, doc);
            saw_vars = true;
            continue;
        }
        Block next;
        if (is_block_start(line, next, line_no)) {
            if (in_block) finish_block(current, doc);
            current = next;
            in_block = true;
            continue;
        }
        if (!in_block)
            fail(line_no, "expected 'ideal', 'prime', or 'point' block");
        current.payload += " " + line;
    }
    if (in_block) finish_block(current, doc);
    if (!saw_vars) throw ParseError("empty document; expected a 'vars' line", 0);
    return doc;
}

Document parse_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

} // namespace paramweyl
