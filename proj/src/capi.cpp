#include "fsind.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fsind/cocycle.hpp"
#include "fsind/errors.hpp"
#include "fsind/report.hpp"
#include "fsind/ty.hpp"
#include "fsind/verify.hpp"

struct fsind_ctx {
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(fsind_ctx* ctx, char** out, Fn&& fn) {
    if (!ctx || !out) return FSIND_INPUT_ERROR;
    *out = nullptr;
    ctx->last_error.clear();
    try {
        std::string text = fn();
        *out = dup_string(text);
        if (!*out) {
            ctx->last_error = "out of memory";
            return FSIND_INPUT_ERROR;
        }
        return FSIND_OK;
    } catch (const fsind::integrity_error& e) {
        ctx->last_error = e.what();
        return FSIND_INTEGRITY_ERROR;
    } catch (const fsind::input_error& e) {
        ctx->last_error = e.what();
        return FSIND_INPUT_ERROR;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return FSIND_INPUT_ERROR;
    }
}

fsind::ThreeCochain load_cocycle(const char* group_spec, const char* path) {
    if (!group_spec || !path) throw fsind::input_error("missing group or cocycle argument");
    fsind::FiniteAbelianGroup g = fsind::FiniteAbelianGroup::parse(group_spec);
    if (g.order() > 16) throw fsind::input_error("desk-scale limit: |G| <= 16");
    fsind::ThreeCochain omega = fsind::read_three_cochain_file(path);
    if (!(omega.group() == g))
        throw fsind::input_error("cocycle file group does not match --group");
    return omega;
}

} // namespace

extern "C" {

fsind_ctx* fsind_ctx_new(void) { return new (std::nothrow) fsind_ctx; }

void fsind_ctx_free(fsind_ctx* ctx) { delete ctx; }

const char* fsind_last_error(const fsind_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* fsind_version(void) { return fsind::version(); }

int fsind_pointed_report(fsind_ctx* ctx, const char* group_spec, const char* cocycle_path,
                         const char* format, char** out) {
    return guarded(ctx, out, [&] {
        std::string fmt = format ? format : "json";
        if (fmt != "json" && fmt != "tsv")
            throw fsind::input_error("format must be json or tsv");
        fsind::ThreeCochain omega = load_cocycle(group_spec, cocycle_path);
        fsind::IndicatorReport rep = fsind::pointed_report(omega.group(), omega);
        return fmt == "tsv" ? rep.to_tsv() : rep.to_json();
    });
}

int fsind_tqd_report(fsind_ctx* ctx, const char* group_spec, const char* cocycle_path,
                     int with_genuineness, char** out) {
    return guarded(ctx, out, [&] {
        fsind::ThreeCochain omega = load_cocycle(group_spec, cocycle_path);
        return fsind::tqd_report(omega.group(), omega, with_genuineness != 0).to_json();
    });
}

int fsind_ty_report(fsind_ctx* ctx, long p, const char* gram, int sign_tau, char** out) {
    return guarded(ctx, out, [&] {
        if (!gram) throw fsind::input_error("missing --gram");
        fsind::BilinearForm b = fsind::BilinearForm::parse(p, gram);
        return fsind::ty_report(fsind::TYCategory(b, sign_tau)).to_json();
    });
}

int fsind_verify_corpus(fsind_ctx* ctx, const char* dir, char** out) {
    return guarded(ctx, out, [&] {
        if (!dir) throw fsind::input_error("missing --corpus");
        return fsind::verify_corpus_report(dir);
    });
}

void fsind_string_free(char* s) { std::free(s); }

} // extern "C"
