// Run records and report serialization (JSON and CSV). All structures are
// plain data filled by the suites; serialization is deterministic for a fixed
// input (ordered keys, fixed row order).
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "talex/families.hpp"
#include "talex/intpoly.hpp"
#include "talex/repvariety.hpp"
#include "talex/twisted.hpp"

namespace talex {

// One engine evaluation at one character.
struct CaseRecord {
    Character ch{{2, 0}, {2, 0}, {0, 0}};
    bool is_real_root = false;
    int multiplicity = 1;
    double root_residual = 0.0;
    double commutation_residual = 0.0;

    TwistedPoly tp;
    DetectionVerdict verdict;
    ClosedFormPrediction prediction;
    double closed_form_defect = -1.0; // -1: prediction degenerate / not checked
    bool prediction_degenerate = false;
    double symmetry_rel_defect = 0.0;
    double fastpath_defect = -1.0;
    double conjugation_defect = -1.0;
    std::vector<LocusLabel> loci;

    bool counted = true; // participates in the suite pass/fail rule
    bool pass = true;    // mathematical claims hold on this case
    bool error = false;  // computational failure (residuals, exceptions)
    std::string note;
};

// One (family, orientation) instance grouping its root/sample cases.
struct InstanceRecord {
    FamilySpec family;
    bool family_valid = true; // false for presentation-file instances
    std::string label;        // display name when family_valid is false
    Orientation orientation;
    GroundTruth gt;
    bool has_riley = false;
    IntPoly riley;
    std::vector<RileyRoot> reducible_roots;
    int reduced_span = -1; // span of the 1-variable Alexander polynomial
    bool reduced_ok = true;
    int skipped_samples = 0; // loci suite: reducible/on-locus draws skipped
    std::vector<CaseRecord> cases;
    bool pass = true;
    bool error = false;
    std::string note;
};

struct Report {
    std::string suite;
    nlohmann::ordered_json config;
    std::vector<InstanceRecord> instances;

    int case_count() const;
    int fail_count() const;  // instances or counted cases with pass = false
    int error_count() const; // instances or cases flagged error
    bool suite_pass() const { return fail_count() == 0 && error_count() == 0; }
};

// Exit-code policy: 0 all pass, 1 mathematical counterexample (takes
// precedence), 2 computational failure only.
int report_exit_code(const Report& r);

nlohmann::ordered_json report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

// Serialization helpers shared with the CLI.
nlohmann::ordered_json json_complex(std::complex<double> v);
nlohmann::ordered_json json_laurent(const LaurentPoly& p);   // exponent -> [re, im]
nlohmann::ordered_json json_intpoly(const IntPoly& p);       // decimal strings, index = exponent
std::string family_name(const FamilySpec& f);

} // namespace talex
