#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fsind.h"

namespace {

int emit(fsind_ctx* ctx, int rc, char* text) {
    if (rc == FSIND_OK) {
        std::fputs(text, stdout);
        fsind_string_free(text);
        return 0;
    }
    std::fprintf(stderr, "error: %s\n", fsind_last_error(ctx));
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Frobenius-Schur indicator reports for pointed categories, "
                 "abelian twisted doubles and integral Tambara-Yamagami categories"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fsind_version()));

    std::string group_spec, cocycle_path, format = "json", gram, tau, corpus_dir;
    long p = 2;
    bool genuine = false;

    CLI::App* pointed = app.add_subcommand("pointed", "Indicators of a pointed category");
    pointed->add_option("--group", group_spec, "group spec, e.g. 2,4")->required();
    pointed->add_option("--cocycle", cocycle_path, "path to a .cocyc file")->required();
    pointed->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

    CLI::App* tqd = app.add_subcommand("tqd", "Center data of a twisted double");
    tqd->add_option("--group", group_spec, "group spec, e.g. 2,4")->required();
    tqd->add_option("--cocycle", cocycle_path, "path to a .cocyc file")->required();
    tqd->add_flag("--genuine", genuine, "decide genuineness (abelian twist only)");

    CLI::App* ty = app.add_subcommand("ty", "Integral Tambara-Yamagami indicators");
    ty->add_option("--p", p, "base characteristic (prime)")->required();
    ty->add_option("--gram", gram, "Gram matrix rows, e.g. \"1,0;0,1\"")->required();
    ty->add_option("--tau", tau, "sign of tau: + or -")->required()->check(CLI::IsMember({"+", "-"}));

    CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite over a corpus");
    verify->add_option("--corpus", corpus_dir, "directory of .cocyc files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : FSIND_INPUT_ERROR;
    }

    fsind_ctx* ctx = fsind_ctx_new();
    if (!ctx) {
        std::fprintf(stderr, "error: out of memory\n");
        return FSIND_INPUT_ERROR;
    }
    char* text = nullptr;
    int rc = FSIND_INPUT_ERROR;
    if (pointed->parsed())
        rc = fsind_pointed_report(ctx, group_spec.c_str(), cocycle_path.c_str(), format.c_str(),
                                  &text);
    else if (tqd->parsed())
        rc = fsind_tqd_report(ctx, group_spec.c_str(), cocycle_path.c_str(), genuine ? 1 : 0, &text);
    else if (ty->parsed())
        rc = fsind_ty_report(ctx, p, gram.c_str(), tau == "+" ? 1 : -1, &text);
    else if (verify->parsed())
        rc = fsind_verify_corpus(ctx, corpus_dir.c_str(), &text);
    int code = emit(ctx, rc, text);
    fsind_ctx_free(ctx);
    return code;
}
