#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsind/cocycle.hpp"
#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"
#include "fsind/ty.hpp"

namespace fsind {

/// Tool version reported in every serialized record.
const char* version();

/// One simple object row: its label, indicator sequence nu_1..nu_N and
/// integer total. For twisted doubles, `simples` carries the (dim, twist)
/// pairs of the center simples graded at this element.
struct ReportObject {
    std::string label;
    std::vector<Cyclotomic> sequence;
    long total = 0;
    std::vector<std::pair<long, Cyclotomic>> simples;
};

/// A deterministic indicator report. Objects are kept in lexicographic
/// label order; identical inputs serialize byte-identically.
struct IndicatorReport {
    std::string family; // pointed | tqd | ty
    std::string group;
    long fs_exponent = 1;
    std::vector<ReportObject> objects;
    std::vector<std::pair<std::string, std::string>> verdicts;

    std::string to_json() const;
    std::string to_tsv() const;
};

IndicatorReport pointed_report(const FiniteAbelianGroup& g, const ThreeCochain& omega);
/// Totals come from the center path and are certified against the
/// summation of the sequence (integrity error on mismatch).
IndicatorReport tqd_report(const FiniteAbelianGroup& g, const ThreeCochain& omega,
                           bool with_genuineness);
IndicatorReport ty_report(const TYCategory& c);

} // namespace fsind
