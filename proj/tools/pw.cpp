#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paramweyl.h"

namespace {

struct Flags {
    std::string file;
    std::string ideal;
    std::string prime;
    std::string target;
    std::string point;
    std::string components;
    std::size_t index = 1;
    std::string samples = "20";
    unsigned max_degree = 6;
    unsigned k_cap = 64;
    bool certify = true;
    bool json = false;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("file", flags.file, "ideal file")->required();
    cmd->add_option("--ideal", flags.ideal, "ideal block to use");
    cmd->add_option("--prime", flags.prime,
                    "prime block, or a file whose first prime block is used");
    cmd->add_option("--point", flags.point, "point block or inline tuple");
    cmd->add_option("--target", flags.target, "operator expression to test");
    cmd->add_option("--components", flags.components,
                    "primary components as q1:p1,q2:p2,...");
    cmd->add_option("--index", flags.index, "1-based component index");
    cmd->add_option("--samples", flags.samples,
                    "sample count, or ';'-separated points");
    cmd->add_option("--max-degree", flags.max_degree,
                    "oracle multiplier degree bound");
    cmd->add_option("--k-cap", flags.k_cap, "power search cap");
    cmd->add_flag("--certify,!--no-certify", flags.certify,
                  "re-certify output bases (default on)");
    cmd->add_flag("--json", flags.json, "structured output");
}

int fail(pw_context* ctx, const char* stage) {
    std::fprintf(stderr, "error: %s: %s\n", stage, pw_last_error(ctx));
    int status = pw_last_status(ctx);
    pw_context_free(ctx);
    return status == PW_PARSE_ERROR || status == PW_INVALID_ARGUMENT ? 2 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parametric Weyl algebra toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("pw ") + pw_version());

    Flags flags;
    static const std::vector<std::pair<const char*, const char*>> kCommands = {
        {"gb", "left Groebner basis of an ideal"},
        {"eliminate", "generators of J cap A"},
        {"reduce-gb", "basis with parametric leading coefficients reduced"},
        {"h-poly", "product of parametric leading coefficients off the prime"},
        {"specialize", "basis image under s -> point"},
        {"fiber-check", "is the specialized quotient nonzero"},
        {"dense-open", "certify nonzero fibers over the prime's zero set"},
        {"lemma21", "multiplier f with f*p inside the primary component"},
        {"thm22-h", "multiplier h carrying sqrt(q_j) into the intersection"},
        {"verify-lemma24", "check (J + R*prime) cap A = prime"},
        {"oracle-member", "bounded-degree membership via exact linear algebra"},
    };
    for (const auto& [name, help] : kCommands)
        add_common(app.add_subcommand(name, help), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();

    pw_context* ctx = pw_context_new();
    if (!ctx) {
        std::fprintf(stderr, "error: out of memory\n");
        return 1;
    }

    pw_document* doc = pw_document_parse_file(ctx, flags.file.c_str());
    if (!doc) return fail(ctx, flags.file.c_str());

    pw_options* opts = pw_options_new(ctx);
    if (!opts) {
        pw_document_free(doc);
        return fail(ctx, "options");
    }
    const std::vector<std::pair<const char*, std::string>> settings = {
        {"ideal", flags.ideal},
        {"prime", flags.prime},
        {"target", flags.target},
        {"point", flags.point},
        {"components", flags.components},
        {"index", std::to_string(flags.index)},
        {"samples", flags.samples},
        {"max-degree", std::to_string(flags.max_degree)},
        {"k-cap", std::to_string(flags.k_cap)},
        {"certify", flags.certify ? "true" : "false"},
        {"json", flags.json ? "true" : "false"},
    };
    for (const auto& [key, value] : settings) {
        if (pw_options_set(ctx, opts, key, value.c_str()) != PW_OK) {
            pw_options_free(opts);
            pw_document_free(doc);
            return fail(ctx, key);
        }
    }

    pw_result* result = nullptr;
    if (pw_run(ctx, doc, command.c_str(), opts, &result) != PW_OK) {
        pw_options_free(opts);
        pw_document_free(doc);
        return fail(ctx, command.c_str());
    }

    const char* output = pw_result_output(result);
    if (output[0]) std::fputs(output, stdout);
    const char* error = pw_result_error(result);
    if (error[0]) std::fprintf(stderr, "%s\n", error);
    const int exit_code = pw_result_exit_code(result);

    pw_result_free(result);
    pw_options_free(opts);
    pw_document_free(doc);
    pw_context_free(ctx);
    return exit_code;
}
