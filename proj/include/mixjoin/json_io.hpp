#pragma once

#include "mixjoin/degeneracy.hpp"
#include "mixjoin/fox.hpp"
#include "mixjoin/joincore.hpp"
#include "mixjoin/link.hpp"
#include "mixjoin/newton.hpp"
#include "mixjoin/zeta.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mixjoin::json_io {

using nlohmann::json;

/// Integers as JSON numbers, everything else as a literal string ("1/2", "(1-2i)").
json coeff_to_json(const GaussianRational& c);
/// Accepts integers or literal strings; floats are rejected (InputError).
GaussianRational coeff_from_json(const json& j);

json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

json face_to_json(const Face& f);
json polygon_to_json(const NewtonPolygon& p);

json witness_to_json(const std::optional<Witness>& w);
json verdict_to_json(const Verdict& v);
json tameness_to_json(const TamenessVerdict& t);

json monodromy_to_json(const GradedMonodromy& m);
GradedMonodromy monodromy_from_json(const json& j);

/// {"terms":[[e,c],...]} for a univariate Laurent polynomial.
json univariate_to_json(const LaurentPoly& p);
LaurentPoly univariate_from_json(const json& j);
json zeta_to_json(const ZetaFunction& z);
ZetaFunction zeta_from_json(const json& j);

/// {"vars":r,"terms":[{"c":1,"e":[...]}]}
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json link_to_json(const MultilinkData& l);
/// Explicit {"components","alexander"} or {"builtin","params"}.
MultilinkData link_from_json(const json& j);

struct WordsInput {
    int mu = 0;
    std::vector<FreeWord> words;
};
WordsInput words_from_json(const json& j);
json words_to_json(const WordsInput& w);

struct RepresentationInput {
    Representation rho;
    NamedWord h{{"h", 1}};
    std::vector<NamedWord> relators;
};
/// {"dim":d,"images":{"b1":M,...,"h":M}}, optional "h_word":[["h",1]] and "relators".
RepresentationInput representation_from_json(const json& j);

struct Bundle {
    JoinInput input;
    std::optional<long> chi_g;
    std::optional<long> chi_g_minus_axes;
    std::string g_text;

    /// chi(F_g minus axes), from chi_g_minus_axes or chi_g - n1 - n2.
    std::optional<long> chi_minus_axes(int n1, int n2) const;
};
Bundle bundle_from_json(const json& j);

json fiber_count_to_json(const FiberCount& c);
json join_report_to_json(const JoinReport& r);
json checks_to_json(const std::vector<CheckEntry>& checks);

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
json read_json_file(const std::string& path);

} // namespace mixjoin::json_io
