#pragma once

#include <string>
#include <variant>

#include "spincert/cobordism.hpp"
#include "spincert/framespin.hpp"
#include "spincert/int_matrix.hpp"

namespace spincert {

inline constexpr const char* kDocumentVersion = "1";

// Unvalidated Seifert payload; run validate_seifert before using it.
struct SeifertDocument {
  IntMatrix a;
  int n = 1;

  bool operator==(const SeifertDocument&) const = default;
};

// Self-describing envelope for every file the CLI reads or writes. Unknown
// kinds and versions are rejected, never guessed.
struct Document {
  enum class Kind { matrix, seifert, spin_input, certificate };
  Kind kind = Kind::matrix;
  std::string version = kDocumentVersion;
  std::variant<IntMatrix, SeifertDocument, SpinInput, SliceCertificate> payload;

  bool operator==(const Document&) const = default;
};

const char* kind_name(Document::Kind kind);

// Throws SyntaxError (with line/column) or SchemaError (naming the field).
Document parse_document(const std::string& text);

// Deterministic canonical form: stable field order, entries emitted as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise.
std::string print_document(const Document& doc);

Document read_document_file(const std::string& path);
void write_document_file(const std::string& path, const Document& doc);

}  // namespace spincert
