#include "spincert/document.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace spincert {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& field,
                               const std::string& what) {
  throw Error(errc::schema_error, "field '" + field + "': " + what);
}

Int parse_int(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) schema_error(field, "empty integer string");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) schema_error(field, "malformed integer string");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        schema_error(field, "malformed integer string '" + s + "'");
    return Int(s);
  }
  schema_error(field, "expected an integer or a decimal string");
}

Json emit_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

IntMatrix parse_matrix(const Json& j, const std::string& field) {
  if (!j.is_object()) schema_error(field, "expected a matrix object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    schema_error(field, "matrix needs rows, cols, entries");
  if (!j["rows"].is_number_unsigned() && !j["rows"].is_number_integer())
    schema_error(field + ".rows", "expected a count");
  long long rows = j["rows"].get<long long>();
  long long cols = j["cols"].get<long long>();
  if (rows < 0 || cols < 0) schema_error(field, "negative dimensions");
  const Json& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows))
    schema_error(field + ".entries", "expected " + std::to_string(rows) +
                                         " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != m.cols())
      schema_error(field + ".entries[" + std::to_string(i) + "]",
                   "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < m.cols(); ++k)
      m.at(i, k) = parse_int(row[k], field + ".entries");
  }
  return m;
}

Json emit_matrix(const IntMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(emit_int(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::vector<std::size_t> parse_ranks(const Json& j, const std::string& field) {
  if (!j.is_array()) schema_error(field, "expected an array of ranks");
  std::vector<std::size_t> out;
  for (const Json& v : j) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
      schema_error(field, "ranks must be nonnegative integers");
    long long r = v.get<long long>();
    if (r < 0) schema_error(field, "ranks must be nonnegative");
    out.push_back(static_cast<std::size_t>(r));
  }
  return out;
}

std::map<int, IntMatrix> parse_matrix_map(const Json& j,
                                          const std::string& field) {
  if (!j.is_object()) schema_error(field, "expected an index -> matrix map");
  std::map<int, IntMatrix> out;
  for (const auto& [key, value] : j.items()) {
    int idx = 0;
    try {
      std::size_t pos = 0;
      idx = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_error(field, "key '" + key + "' is not an integer index");
    }
    out.emplace(idx, parse_matrix(value, field + "." + key));
  }
  return out;
}

Json emit_matrix_map(const std::map<int, IntMatrix>& m) {
  Json j = Json::object();
  for (const auto& [idx, mat] : m) j[std::to_string(idx)] = emit_matrix(mat);
  return j;
}

SpinInput parse_spin_input(const Json& j) {
  for (const char* field : {"dims", "v_ranks", "m_ranks", "linking",
                            "intersection"})
    if (!j.contains(field)) schema_error(field, "missing");
  const Json& dims = j["dims"];
  for (const char* field : {"k", "m", "n"})
    if (!dims.contains(field) || !dims[field].is_number_integer())
      schema_error(std::string("dims.") + field, "expected an integer");
  SpinInput input;
  input.dims = {dims["k"].get<int>(), dims["m"].get<int>(),
                dims["n"].get<int>()};
  if (input.dims.k < 3) schema_error("dims.k", "k must be >= 3");
  if (input.dims.m < 1) schema_error("dims.m", "m must be >= 1");
  input.v_ranks = parse_ranks(j["v_ranks"], "v_ranks");
  input.m_ranks = parse_ranks(j["m_ranks"], "m_ranks");
  input.linking = parse_matrix_map(j["linking"], "linking");
  input.intersection = parse_matrix_map(j["intersection"], "intersection");
  return input;
}

Json emit_spin_input(const SpinInput& input) {
  Json j;
  j["dims"] = {{"k", input.dims.k}, {"m", input.dims.m}, {"n", input.dims.n}};
  j["v_ranks"] = input.v_ranks;
  j["m_ranks"] = input.m_ranks;
  j["linking"] = emit_matrix_map(input.linking);
  j["intersection"] = emit_matrix_map(input.intersection);
  return j;
}

SliceCertificate parse_certificate(const Json& j) {
  for (const char* field :
       {"target", "stabilizer", "stabilizer_witness", "p", "half"})
    if (!j.contains(field)) schema_error(field, "missing");
  if (!j["half"].is_number_integer() && !j["half"].is_number_unsigned())
    schema_error("half", "expected a count");
  long long half = j["half"].get<long long>();
  if (half < 0) schema_error("half", "must be nonnegative");
  return SliceCertificate{parse_matrix(j["target"], "target"),
                          parse_matrix(j["stabilizer"], "stabilizer"),
                          parse_matrix(j["stabilizer_witness"],
                                       "stabilizer_witness"),
                          parse_matrix(j["p"], "p"),
                          static_cast<std::size_t>(half)};
}

Json emit_certificate(const SliceCertificate& cert) {
  Json j;
  j["target"] = emit_matrix(cert.target);
  j["stabilizer"] = emit_matrix(cert.stabilizer);
  j["stabilizer_witness"] = emit_matrix(cert.stabilizer_witness);
  j["p"] = emit_matrix(cert.p);
  j["half"] = cert.half;
  return j;
}

}  // namespace

const char* kind_name(Document::Kind kind) {
  switch (kind) {
    case Document::Kind::matrix: return "matrix";
    case Document::Kind::seifert: return "seifert";
    case Document::Kind::spin_input: return "spin-input";
    case Document::Kind::certificate: return "certificate";
  }
  return "unknown";
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to line/column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(errc::syntax_error, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + e.what());
  }
  if (!j.is_object()) schema_error("(document)", "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    schema_error("kind", "missing or not a string");
  if (!j.contains("version") || !j["version"].is_string())
    schema_error("version", "missing or not a string");
  if (j["version"].get<std::string>() != kDocumentVersion)
    schema_error("version", "unsupported version '" +
                                j["version"].get<std::string>() + "'");
  if (!j.contains("payload")) schema_error("payload", "missing");
  const Json& payload = j["payload"];

  Document doc;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "matrix") {
    doc.kind = Document::Kind::matrix;
    doc.payload = parse_matrix(payload, "payload");
  } else if (kind == "seifert") {
    doc.kind = Document::Kind::seifert;
    if (!payload.contains("n") || !payload["n"].is_number_integer())
      schema_error("payload.n", "expected an integer");
    doc.payload = SeifertDocument{parse_matrix(payload["matrix"],
                                               "payload.matrix"),
                                  payload["n"].get<int>()};
  } else if (kind == "spin-input") {
    doc.kind = Document::Kind::spin_input;
    doc.payload = parse_spin_input(payload);
  } else if (kind == "certificate") {
    doc.kind = Document::Kind::certificate;
    doc.payload = parse_certificate(payload);
  } else {
    schema_error("kind", "unknown kind '" + kind + "'");
  }
  return doc;
}

std::string print_document(const Document& doc) {
  Json j;
  j["kind"] = kind_name(doc.kind);
  j["version"] = doc.version;
  switch (doc.kind) {
    case Document::Kind::matrix:
      j["payload"] = emit_matrix(std::get<IntMatrix>(doc.payload));
      break;
    case Document::Kind::seifert: {
      const auto& s = std::get<SeifertDocument>(doc.payload);
      Json p;
      p["n"] = s.n;
      p["matrix"] = emit_matrix(s.a);
      j["payload"] = std::move(p);
      break;
    }
    case Document::Kind::spin_input:
      j["payload"] = emit_spin_input(std::get<SpinInput>(doc.payload));
      break;
    case Document::Kind::certificate:
      j["payload"] = emit_certificate(std::get<SliceCertificate>(doc.payload));
      break;
  }
  return j.dump(2) + "\n";
}

Document read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(errc::syntax_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_document_file(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(errc::syntax_error, "cannot write '" + path + "'");
  out << print_document(doc);
}

}  // namespace spincert
