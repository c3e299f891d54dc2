#pragma once

// Document format and JSON (de)serialization. Exact payloads carry
// rationals as "p/q" strings; only smoothing reports use decimal floats.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cartopoly/cartography.hpp"
#include "cartopoly/smoothing.hpp"
#include "cartopoly/strips.hpp"

namespace carto {

using Json = nlohmann::json;

// Parse failure with the offending field path, e.g. "presentation.focus[2].x".
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

struct Document {
    std::string version = "1";
    Presentation presentation;
    std::optional<SignChoice> eps;
    std::optional<AdmissibleTriple> strips;
};

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j, const std::string& path);

Json region_to_json(const Region& r);
Region region_from_json(const Json& j, const std::string& path);

Json affine_to_json(const ZAffine2& g);
ZAffine2 affine_from_json(const Json& j, const std::string& path);

Json map_to_json(const PiecewiseVertMap& m);

Json signs_to_json(const SignChoice& eps);
SignChoice signs_from_json(const Json& j, const std::string& path);

Json triple_to_json(const AdmissibleTriple& t);
AdmissibleTriple triple_from_json(const Json& j, const std::string& path);

Json presentation_to_json(const Presentation& p);
// Validates cross-references (sign length, focus interior) and throws
// ParseError with field context on any mismatch.
Presentation presentation_from_json(const Json& j, const std::string& path);

Json document_to_json(const Document& d);
Document document_from_json(const Json& j);

Document parse_document(const std::string& text);
std::string emit_document(const Document& d);

Json family_to_json(const std::vector<FamilyEntry>& fam);
Json embedding_report_to_json(const EmbeddingCheckReport& r);

}  // namespace carto
