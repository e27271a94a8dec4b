#include "talex/report.hpp"

#include <sstream>

namespace talex {

using nlohmann::ordered_json;

int Report::case_count() const {
    int n = 0;
    for (const auto& inst : instances) n += static_cast<int>(inst.cases.size());
    return n;
}

int Report::fail_count() const {
    int n = 0;
    for (const auto& inst : instances) {
        if (!inst.pass) ++n;
        for (const auto& c : inst.cases)
            if (c.counted && !c.pass) ++n;
    }
    return n;
}

int Report::error_count() const {
    int n = 0;
    for (const auto& inst : instances) {
        if (inst.error) ++n;
        for (const auto& c : inst.cases)
            if (c.error) ++n;
    }
    return n;
}

int report_exit_code(const Report& r) {
    if (r.fail_count() > 0) return 1;
    if (r.error_count() > 0) return 2;
    return 0;
}

ordered_json json_complex(std::complex<double> v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json json_laurent(const LaurentPoly& p) {
    ordered_json out = ordered_json::object();
    for (int e = p.lo(); e <= p.hi(); ++e) {
        auto c = p.coeff(e);
        if (c == std::complex<double>(0.0)) continue;
        out[std::to_string(e)] = json_complex(c);
    }
    return out;
}

ordered_json json_intpoly(const IntPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

std::string family_name(const FamilySpec& f) {
    std::ostringstream out;
    if (f.kind == FamilySpec::Kind::J)
        out << "J(" << 2 * f.m + 1 << "," << 2 * f.n + 1 << ")";
    else
        out << "C(" << 2 * f.m << "," << 2 * f.n << ",-" << 2 * f.p << ")";
    return out.str();
}

namespace {

const char* fibered_name(Fibered f) {
    switch (f) {
    case Fibered::Yes: return "yes";
    case Fibered::No: return "no";
    default: return "unknown";
    }
}

ordered_json json_case(const CaseRecord& c) {
    ordered_json out;
    out["x"] = json_complex(c.ch.x);
    out["y"] = json_complex(c.ch.y);
    out["z"] = json_complex(c.ch.z);
    out["real_root"] = c.is_real_root;
    out["multiplicity"] = c.multiplicity;
    out["root_residual"] = c.root_residual;
    out["commutation_residual"] = c.commutation_residual;
    out["delta"] = json_laurent(c.tp.delta);
    out["span"] = c.tp.span;
    out["top_coeff"] = json_complex(c.tp.top_coeff);
    out["monic"] = c.tp.monic;
    out["symmetry_rel_defect"] = c.symmetry_rel_defect;
    out["tolerance_unstable"] = c.tp.tolerance_unstable;
    out["predicted_span"] = c.prediction.hi - c.prediction.lo;
    out["predicted_coeff"] = json_complex(c.prediction.coeff);
    out["prediction_degenerate"] = c.prediction_degenerate;
    out["closed_form_defect"] = c.closed_form_defect;
    out["fastpath_defect"] = c.fastpath_defect;
    out["conjugation_defect"] = c.conjugation_defect;
    ordered_json loci = ordered_json::array();
    for (const auto& l : c.loci) loci.push_back(l.to_string());
    out["loci"] = loci;
    out["genus_detected"] = c.verdict.genus_detected;
    if (c.verdict.fiber_applicable) out["fiber_detected"] = c.verdict.fiber_detected;
    out["counted"] = c.counted;
    out["pass"] = c.pass;
    out["error"] = c.error;
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

ordered_json json_instance(const InstanceRecord& inst) {
    ordered_json out;
    if (inst.family_valid) {
        out["family"] = family_name(inst.family);
        out["m"] = inst.family.m;
        out["n"] = inst.family.n;
        if (inst.family.kind == FamilySpec::Kind::C) out["p"] = inst.family.p;
        out["flip"] = inst.orientation.flip;
        out["genus"] = inst.gt.genus;
        out["fibered"] = fibered_name(inst.gt.fibered);
        out["thurston_norm"] = inst.gt.thurston_norm;
        out["degree_prediction"] = inst.gt.degree_prediction;
    } else {
        out["family"] = inst.label;
    }
    if (inst.has_riley) {
        out["riley_coeffs"] = json_intpoly(inst.riley);
        ordered_json red = ordered_json::array();
        for (const auto& r : inst.reducible_roots) red.push_back(json_complex(r.z));
        out["reducible_roots"] = red;
    }
    if (inst.reduced_span >= 0) {
        out["reduced_alexander_span"] = inst.reduced_span;
        out["reduced_alexander_ok"] = inst.reduced_ok;
    }
    if (inst.skipped_samples > 0) out["skipped_samples"] = inst.skipped_samples;
    ordered_json cases = ordered_json::array();
    for (const auto& c : inst.cases) cases.push_back(json_case(c));
    out["cases"] = cases;
    out["pass"] = inst.pass;
    out["error"] = inst.error;
    if (!inst.note.empty()) out["note"] = inst.note;
    return out;
}

void csv_field(std::ostream& out, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

} // namespace

ordered_json report_to_json(const Report& r) {
    ordered_json out;
    out["suite"] = r.suite;
    out["config"] = r.config;
    ordered_json instances = ordered_json::array();
    for (const auto& inst : r.instances) instances.push_back(json_instance(inst));
    out["instances"] = instances;
    ordered_json summary;
    summary["instances"] = r.instances.size();
    summary["cases"] = r.case_count();
    summary["failures"] = r.fail_count();
    summary["errors"] = r.error_count();
    summary["suite_pass"] = r.suite_pass();
    out["summary"] = summary;
    return out;
}

std::string report_to_csv(const Report& r) {
    std::ostringstream out;
    out << "suite,family,m,n,p,flip,z_re,z_im,real_root,span,top_re,top_im,monic,"
           "genus_detected,fiber_detected,counted,pass,error,note\n";
    for (const auto& inst : r.instances) {
        for (const auto& c : inst.cases) {
            out << r.suite << ",";
            csv_field(out, inst.family_valid ? family_name(inst.family) : inst.label);
            if (inst.family_valid)
                out << "," << inst.family.m << "," << inst.family.n << ","
                    << (inst.family.kind == FamilySpec::Kind::C ? std::to_string(inst.family.p)
                                                                : "");
            else
                out << ",,,";
            out << "," << (inst.orientation.flip ? 1 : 0) << "," << c.ch.z.real() << ","
                << c.ch.z.imag() << "," << (c.is_real_root ? 1 : 0) << "," << c.tp.span << ","
                << c.tp.top_coeff.real() << "," << c.tp.top_coeff.imag() << ","
                << (c.tp.monic ? 1 : 0) << "," << (c.verdict.genus_detected ? 1 : 0) << ","
                << (c.verdict.fiber_applicable ? (c.verdict.fiber_detected ? "1" : "0") : "") << ","
                << (c.counted ? 1 : 0) << "," << (c.pass ? 1 : 0) << "," << (c.error ? 1 : 0)
                << ",";
            csv_field(out, c.note);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace talex
