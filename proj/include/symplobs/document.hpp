#pragma once

// JSON document schema for manifolds, pairs, rings and splittings, plus
// report rendering.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "symplobs/obstructions.hpp"
#include "symplobs/rings.hpp"
#include "symplobs/topology.hpp"

namespace symplobs {

inline constexpr const char* kSchemaVersion = "1.0";

enum class DocKind { Manifold4, Surface2, Pair, Ring, Split };

using Payload = std::variant<Manifold4, Surface2, LogPairData, GradedRing, SplitData>;

struct Document {
    std::string schema_version = kSchemaVersion;
    DocKind kind = DocKind::Manifold4;
    Payload payload;
    // Unknown fields seen in lenient mode.
    std::vector<std::string> warnings;
};

// Carries every problem found, each prefixed with its field path or byte offset.
class ParseError : public InputError {
public:
    explicit ParseError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

private:
    std::vector<std::string> errors_;
};

struct ParseOptions {
    // Unknown fields become warnings instead of errors.
    bool lenient = false;
};

Document parse_document(const std::string& text, const ParseOptions& opts = {});
Document load_document(const std::string& path, const ParseOptions& opts = {});

// Canonical form: sorted keys, two-space indent, trailing newline.
std::string render_document(const Document& doc);
nlohmann::json document_to_json(const Document& doc);

Document make_document(Payload payload);
std::string to_string(DocKind k);

// Resolves a manifold reference: a catalog name or a connected-sum expression.
Manifold resolve_manifold_ref(const std::string& ref);

std::string render_report_text(const ObstructionReport& r, bool color = false);
std::string render_report_json(const ObstructionReport& r);
nlohmann::json report_to_json(const ObstructionReport& r);

} // namespace symplobs
