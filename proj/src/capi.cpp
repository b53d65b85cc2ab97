#include "paramweyl.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "paramweyl/errors.hpp"
#include "paramweyl/idealfile.hpp"
#include "paramweyl/parser.hpp"
#include "paramweyl/runner.hpp"
#include "paramweyl/weyl.hpp"

struct pw_context {
    std::string error;
    int status = PW_OK;
};

struct pw_operator {
    paramweyl::WeylOperator op;
};

struct pw_document {
    paramweyl::Document doc;
};

struct pw_options {
    paramweyl::RunOptions opts;
};

struct pw_result {
    paramweyl::RunResult res;
};

namespace {

int status_of_exception() {
    try {
        throw;
    } catch (const paramweyl::VerifyError&) {
        return PW_VERIFY_FAIL;
    } catch (const paramweyl::ParseError&) {
        return PW_PARSE_ERROR;
    } catch (const paramweyl::UsageError&) {
        return PW_INVALID_ARGUMENT;
    } catch (const paramweyl::InvalidArgument&) {
        return PW_INVALID_ARGUMENT;
    } catch (const paramweyl::LimitExceeded&) {
        return PW_LIMIT_EXCEEDED;
    } catch (...) {
        return PW_INTERNAL_ERROR;
    }
}

void clear(pw_context* ctx) {
    ctx->error.clear();
    ctx->status = PW_OK;
}

int record(pw_context* ctx, const std::exception& e) {
    ctx->status = status_of_exception();
    ctx->error = e.what();
    return ctx->status;
}

int record_message(pw_context* ctx, int status, const std::string& msg) {
    ctx->status = status;
    ctx->error = msg;
    return ctx->status;
}

// Runs fn with exceptions translated onto the context; returns fallback on
// failure.
template <typename T, typename Fn>
T guarded(pw_context* ctx, T fallback, Fn&& fn) {
    if (!ctx) return fallback;
    clear(ctx);
    try {
        return fn();
    } catch (const std::exception& e) {
        record(ctx, e);
        return fallback;
    }
}

bool parse_bool(const std::string& value, bool& out) {
    if (value == "true" || value == "1") {
        out = true;
        return true;
    }
    if (value == "false" || value == "0") {
        out = false;
        return true;
    }
    return false;
}

bool parse_uint(const std::string& value, unsigned long& out) {
    if (value.empty()) return false;
    out = 0;
    for (char c : value) {
        if (c < '0' || c > '9') return false;
        out = out * 10 + static_cast<unsigned long>(c - '0');
        if (out > 100000000) return false;
    }
    return true;
}

} // namespace

extern "C" {

const char* pw_version(void) { return "1.0.0"; }

pw_context* pw_context_new(void) { return new (std::nothrow) pw_context(); }

void pw_context_free(pw_context* ctx) { delete ctx; }

const char* pw_last_error(const pw_context* ctx) {
    return ctx ? ctx->error.c_str() : "null context";
}

int pw_last_status(const pw_context* ctx) {
    return ctx ? ctx->status : PW_INVALID_ARGUMENT;
}

pw_operator* pw_operator_parse(pw_context* ctx, const char* text, size_t n,
                               size_t p) {
    return guarded<pw_operator*>(ctx, nullptr, [&]() -> pw_operator* {
        if (!text) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null text");
            return nullptr;
        }
        return new pw_operator{paramweyl::parse_operator(text, n, p)};
    });
}

pw_operator* pw_operator_add(pw_context* ctx, const pw_operator* a,
                             const pw_operator* b) {
    return guarded<pw_operator*>(ctx, nullptr, [&]() -> pw_operator* {
        if (!a || !b) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null operator");
            return nullptr;
        }
        return new pw_operator{a->op + b->op};
    });
}

pw_operator* pw_operator_mul(pw_context* ctx, const pw_operator* a,
                             const pw_operator* b) {
    return guarded<pw_operator*>(ctx, nullptr, [&]() -> pw_operator* {
        if (!a || !b) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null operator");
            return nullptr;
        }
        return new pw_operator{paramweyl::weyl_mul(a->op, b->op)};
    });
}

pw_operator* pw_operator_specialize(pw_context* ctx, const pw_operator* op,
                                    const char* point) {
    return guarded<pw_operator*>(ctx, nullptr, [&]() -> pw_operator* {
        if (!op || !point) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null operator or point");
            return nullptr;
        }
        const paramweyl::RationalPoint alpha =
            paramweyl::parse_rational_point(point, op->op.p());
        return new pw_operator{paramweyl::specialize(op->op, alpha)};
    });
}

char* pw_operator_print(pw_context* ctx, const pw_operator* op) {
    return guarded<char*>(ctx, nullptr, [&]() -> char* {
        if (!op) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null operator");
            return nullptr;
        }
        const std::string text = op->op.to_string();
        char* out = static_cast<char*>(std::malloc(text.size() + 1));
        if (!out) {
            record_message(ctx, PW_INTERNAL_ERROR, "out of memory");
            return nullptr;
        }
        std::memcpy(out, text.c_str(), text.size() + 1);
        return out;
    });
}

int pw_operator_equal(pw_context* ctx, const pw_operator* a,
                      const pw_operator* b) {
    return guarded<int>(ctx, -1, [&]() -> int {
        if (!a || !b) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null operator");
            return -1;
        }
        if (a->op.n() != b->op.n() || a->op.p() != b->op.p()) {
            record_message(ctx, PW_INVALID_ARGUMENT,
                           "operators from different rings");
            return -1;
        }
        return a->op == b->op ? 1 : 0;
    });
}

void pw_operator_free(pw_operator* op) { delete op; }

void pw_string_free(char* text) { std::free(text); }

pw_document* pw_document_parse(pw_context* ctx, const char* text) {
    return guarded<pw_document*>(ctx, nullptr, [&]() -> pw_document* {
        if (!text) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null text");
            return nullptr;
        }
        return new pw_document{paramweyl::parse_document(text)};
    });
}

pw_document* pw_document_parse_file(pw_context* ctx, const char* path) {
    return guarded<pw_document*>(ctx, nullptr, [&]() -> pw_document* {
        if (!path) {
            record_message(ctx, PW_INVALID_ARGUMENT, "null path");
            return nullptr;
        }
        return new pw_document{paramweyl::parse_document_file(path)};
    });
}

int pw_document_nvars(const pw_document* doc) {
    return doc ? static_cast<int>(doc->doc.n) : -1;
}

int pw_document_pvars(const pw_document* doc) {
    return doc ? static_cast<int>(doc->doc.p) : -1;
}

void pw_document_free(pw_document* doc) { delete doc; }

pw_options* pw_options_new(pw_context* ctx) {
    return guarded<pw_options*>(ctx, nullptr,
                                [&]() -> pw_options* { return new pw_options(); });
}

int pw_options_set(pw_context* ctx, pw_options* opts, const char* key,
                   const char* value) {
    if (!ctx) return PW_INVALID_ARGUMENT;
    clear(ctx);
    if (!opts || !key || !value)
        return record_message(ctx, PW_INVALID_ARGUMENT,
                              "null options, key, or value");
    const std::string k = key;
    const std::string v = value;
    auto& o = opts->opts;
    if (k == "ideal") {
        o.ideal = v;
    } else if (k == "prime") {
        o.prime = v;
    } else if (k == "target") {
        o.target = v;
    } else if (k == "point") {
        o.point = v;
    } else if (k == "components") {
        o.components = v;
    } else if (k == "samples") {
        o.samples = v;
    } else if (k == "index" || k == "max-degree" || k == "k-cap") {
        unsigned long parsed = 0;
        if (!parse_uint(v, parsed))
            return record_message(ctx, PW_INVALID_ARGUMENT,
                                  "key '" + k + "' needs a decimal value");
        if (k == "index")
            o.index = parsed;
        else if (k == "max-degree")
            o.max_degree = static_cast<std::uint32_t>(parsed);
        else
            o.k_cap = static_cast<std::uint32_t>(parsed);
    } else if (k == "certify" || k == "json") {
        bool parsed = false;
        if (!parse_bool(v, parsed))
            return record_message(ctx, PW_INVALID_ARGUMENT,
                                  "key '" + k + "' needs true or false");
        (k == "certify" ? o.certify : o.json) = parsed;
    } else {
        return record_message(ctx, PW_INVALID_ARGUMENT,
                              "unknown option key '" + k + "'");
    }
    return PW_OK;
}

void pw_options_free(pw_options* opts) { delete opts; }

int pw_run(pw_context* ctx, const pw_document* doc, const char* command,
           const pw_options* opts, pw_result** result) {
    if (!ctx) return PW_INVALID_ARGUMENT;
    clear(ctx);
    if (result) *result = nullptr;
    if (!doc || !command || !result)
        return record_message(ctx, PW_INVALID_ARGUMENT,
                              "null document, command, or result slot");
    try {
        static const paramweyl::RunOptions kDefaults;
        paramweyl::RunResult res = paramweyl::run_command(
            command, doc->doc, opts ? opts->opts : kDefaults);
        *result = new pw_result{std::move(res)};
        return PW_OK;
    } catch (const std::exception& e) {
        return record(ctx, e);
    }
}

int pw_result_exit_code(const pw_result* result) {
    return result ? result->res.exit_code : -1;
}

const char* pw_result_output(const pw_result* result) {
    return result ? result->res.output.c_str() : "";
}

const char* pw_result_error(const pw_result* result) {
    return result ? result->res.error.c_str() : "";
}

void pw_result_free(pw_result* result) { delete result; }

} // extern "C"
