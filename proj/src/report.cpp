#include "fsind/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fsind/pointed.hpp"
#include "fsind/tqd.hpp"

namespace fsind {

const char* version() { return "0.1.0"; }

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json value_json(const Cyclotomic& v) { return ordered_json::parse(v.to_json()); }

} // namespace

std::string IndicatorReport::to_json() const {
    ordered_json out;
    out["family"] = family;
    out["group"] = group;
    out["fs_exponent"] = fs_exponent;
    out["objects"] = ordered_json::array();
    for (const ReportObject& o : objects) {
        ordered_json rec;
        rec["label"] = o.label;
        rec["sequence"] = ordered_json::array();
        for (const Cyclotomic& v : o.sequence) rec["sequence"].push_back(value_json(v));
        rec["total"] = o.total;
        if (!o.simples.empty()) {
            rec["simples"] = ordered_json::array();
            for (const auto& [dim, twist] : o.simples) {
                ordered_json s;
                s["dim"] = dim;
                s["twist"] = value_json(twist);
                rec["simples"].push_back(s);
            }
        }
        out["objects"].push_back(rec);
    }
    out["verdicts"] = ordered_json::object();
    for (const auto& [k, v] : verdicts) out["verdicts"][k] = v;
    out["version"] = version();
    return out.dump(2) + "\n";
}

std::string IndicatorReport::to_tsv() const {
    std::ostringstream out;
    out << "object";
    for (long n = 1; n <= fs_exponent; ++n) out << "\tn" << n;
    out << "\ttotal\n";
    for (const ReportObject& o : objects) {
        out << o.label;
        for (const Cyclotomic& v : o.sequence) out << '\t' << v.compact();
        out << '\t' << o.total << '\n';
    }
    return out.str();
}

namespace {

void sort_objects(std::vector<ReportObject>& objects) {
    std::sort(objects.begin(), objects.end(),
              [](const ReportObject& a, const ReportObject& b) { return a.label < b.label; });
}

} // namespace

IndicatorReport pointed_report(const FiniteAbelianGroup& g, const ThreeCochain& omega) {
    PointedCategory c(g, omega);
    IndicatorReport rep;
    rep.family = "pointed";
    rep.group = g.spec();
    rep.fs_exponent = c.fs_exponent();
    for (const GroupElement& x : g.elements()) {
        ReportObject o;
        o.label = x.label();
        for (long n = 1; n <= rep.fs_exponent; ++n) o.sequence.push_back(c.indicator(x, n));
        o.total = c.total_indicator(x);
        rep.objects.push_back(std::move(o));
    }
    sort_objects(rep.objects);
    return rep;
}

IndicatorReport tqd_report(const FiniteAbelianGroup& g, const ThreeCochain& omega,
                           bool with_genuineness) {
    TwistedDouble d(g, omega);
    PointedCategory c(g, omega);
    IndicatorReport rep;
    rep.family = "tqd";
    rep.group = g.spec();
    rep.fs_exponent = c.fs_exponent();
    for (const GroupElement& x : g.elements()) {
        ReportObject o;
        o.label = x.label();
        Cyclotomic sum;
        for (long n = 1; n <= rep.fs_exponent; ++n) {
            o.sequence.push_back(c.indicator(x, n));
            sum += o.sequence.back();
        }
        o.total = d.total_indicator_via_center(x);
        if (sum != Cyclotomic::integer(o.total))
            throw integrity_error("total indicator paths disagree at " + o.label);
        rep.objects.push_back(std::move(o));
    }
    for (const CenterSimple& s : d.center_simples()) {
        std::string label = s.g.label();
        for (ReportObject& o : rep.objects)
            if (o.label == label) o.simples.emplace_back(s.dim, s.twist);
    }
    sort_objects(rep.objects);
    if (with_genuineness) {
        rep.verdicts.emplace_back(
            "genuine", d.is_genuine() == Genuineness::Genuine ? "Genuine" : "NotGenuine");
        // The group of group-likes and its projection onto G, so the
        // pointed-category run behind the verdict can be reproduced.
        TwistedDouble::GrouplikeGroup gg = d.grouplike_group();
        rep.verdicts.emplace_back("grouplike_group", gg.shape.spec());
        std::string proj;
        for (const GroupElement& x : gg.projection) {
            if (!proj.empty()) proj += " ";
            proj += x.label();
        }
        rep.verdicts.emplace_back("grouplike_projection", proj);
    }
    return rep;
}

IndicatorReport ty_report(const TYCategory& c) {
    IndicatorReport rep;
    rep.family = "ty";
    rep.group = c.base_group().spec();
    rep.fs_exponent = c.fs_exponent();
    // The invertibles split into the unit and a single isomorphism class of
    // order-p representatives; report one row each, plus m.
    std::vector<GroupElement> reps = {c.base_group().identity(), c.base_group().element_at(1)};
    for (const GroupElement& a : reps) {
        ReportObject o;
        o.label = a.label();
        for (long n = 1; n <= rep.fs_exponent; ++n) o.sequence.push_back(c.indicator_invertible(a, n));
        o.total = c.total_invertible(a);
        rep.objects.push_back(std::move(o));
    }
    ReportObject m;
    m.label = "m";
    for (long n = 1; n <= rep.fs_exponent; ++n) m.sequence.push_back(c.indicator_m(n));
    m.total = c.total_m();
    rep.objects.push_back(std::move(m));
    sort_objects(rep.objects);
    rep.verdicts.emplace_back("fibration", c.admits_fibration() == FibrationVerdict::Fibration
                                               ? "Fibration"
                                               : "NoFibration");
    if (c.p() == 2)
        rep.verdicts.emplace_back("form_class",
                                  c.form_class().alternating ? "alternating" : "non-alternating");
    else
        rep.verdicts.emplace_back("form_class", c.form_class().hyperbolic ? "hyperbolic"
                                                                          : "non-hyperbolic");
    return rep;
}

} // namespace fsind
