#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spincert/cobordism.hpp"
#include "spincert/document.hpp"
#include "spincert/oracle.hpp"
#include "spincert/seifert.hpp"

namespace {

using namespace spincert;

constexpr int kExitOk = 0;
constexpr int kExitInputFailure = 1;
constexpr int kExitInternalError = 2;

void emit(const std::string& out_path, const Document& doc) {
  if (out_path.empty())
    std::cout << print_document(doc);
  else
    write_document_file(out_path, doc);
}

int cmd_validate(const std::string& path) {
  Document doc = read_document_file(path);
  switch (doc.kind) {
    case Document::Kind::matrix:
      std::cout << "matrix: " << std::get<IntMatrix>(doc.payload).rows()
                << " x " << std::get<IntMatrix>(doc.payload).cols() << "\n";
      break;
    case Document::Kind::seifert: {
      const auto& s = std::get<SeifertDocument>(doc.payload);
      SeifertData data = validate_seifert(s.a, s.n);
      std::cout << "seifert: valid; n=" << data.n << " epsilon="
                << (data.epsilon > 0 ? "+1" : "-1") << " size="
                << data.a.rows() << "\n";
      break;
    }
    case Document::Kind::spin_input: {
      const auto& input = std::get<SpinInput>(doc.payload);
      validate(input);
      std::cout << "spin-input: valid; k=" << input.dims.k << " m="
                << input.dims.m << " n=" << input.dims.n << "\n";
      break;
    }
    case Document::Kind::certificate: {
      VerifyResult r = verify_explain(std::get<SliceCertificate>(doc.payload));
      if (!r.ok) {
        std::cerr << "certificate: INVALID: " << r.diagnostic << "\n";
        return kExitInputFailure;
      }
      std::cout << "certificate: valid\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_spin(const std::string& path, const std::string& out_path) {
  Document doc = read_document_file(path);
  if (doc.kind != Document::Kind::spin_input)
    throw Error(errc::schema_error, "spin expects a spin-input document");
  const auto& input = std::get<SpinInput>(doc.payload);
  auto [a_sigma, layout] = assemble(input);
  std::cerr << "assembled " << a_sigma.rows() << " x " << a_sigma.cols()
            << " Seifert matrix; summand ranks:";
  for (const auto& s : layout.summands)
    std::cerr << " a=" << s.a << ":" << s.rank;
  std::cerr << "\n";
  emit(out_path, Document{Document::Kind::matrix, kDocumentVersion,
                          std::move(a_sigma)});
  return kExitOk;
}

int cmd_certify(const std::string& path, const std::string& out_path) {
  Document doc = read_document_file(path);
  if (doc.kind != Document::Kind::spin_input)
    throw Error(errc::schema_error, "certify expects a spin-input document");
  const auto& input = std::get<SpinInput>(doc.payload);
  SliceCertificate cert = certify_frame_spin(input);
  VerifyResult check = verify_explain(cert);
  if (!check.ok) {
    std::cerr << "internal error: produced certificate fails verification: "
              << check.diagnostic << "\n";
    return kExitInternalError;
  }
  std::cerr << "certified: target size " << cert.target.rows()
            << ", stabilizer rank " << cert.stabilizer_rank()
            << ", witness bit-size " << cert.witness_bit_size() << "\n";
  emit(out_path, Document{Document::Kind::certificate, kDocumentVersion,
                          std::move(cert)});
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  Document doc = read_document_file(path);
  if (doc.kind != Document::Kind::certificate)
    throw Error(errc::schema_error, "verify expects a certificate document");
  VerifyResult r = verify_explain(std::get<SliceCertificate>(doc.payload));
  if (!r.ok) {
    std::cerr << "INVALID: " << r.diagnostic << "\n";
    return kExitInputFailure;
  }
  std::cout << "OK\n";
  return kExitOk;
}

int cmd_invariants(const std::string& path) {
  Document doc = read_document_file(path);
  switch (doc.kind) {
    case Document::Kind::seifert: {
      const auto& s = std::get<SeifertDocument>(doc.payload);
      SeifertData data = validate_seifert(s.a, s.n);
      IntMatrix sym = epsilon_symmetrization(data);
      std::cout << "valid; det(A" << (data.epsilon > 0 ? "+" : "-")
                << "A')=" << determinant(sym) << "\n";
      std::cout << "knot dimension: S^" << (2 * data.n - 1) << " in S^"
                << (2 * data.n + 1) << " ("
                << slice_dispatch_message(even_dimensional_slice(2 * data.n + 1))
                << ")\n";
      if (data.epsilon == 1) {
        std::cout << "signature(A+A') = " << signature(sym) << "\n";
        std::cout << "residue " << levine_signature_residue(data)
                  << " mod 16\n";
      }
      break;
    }
    case Document::Kind::spin_input: {
      const auto& input = std::get<SpinInput>(doc.payload);
      validate(input);
      auto [a_sigma, layout] = assemble(input);
      std::cout << "valid; k=" << input.dims.k << " m=" << input.dims.m
                << " n=" << input.dims.n << "\n";
      std::cout << "block grid (a: rank, empty?):\n";
      for (const auto& s : layout.summands)
        std::cout << "  a=" << s.a << " b=" << s.b << " rank=" << s.rank
                  << (s.rank == 0 ? " (empty)" : "") << "\n";
      std::cout << "assembled size " << layout.total << "; middle rank "
                << layout.middle_rank() << "\n";
      const int epsilon = input.dims.n % 2 == 0 ? 1 : -1;
      IntMatrix sym = epsilon == 1 ? a_sigma + transpose(a_sigma)
                                   : a_sigma - transpose(a_sigma);
      std::cout << "det(A_sigma" << (epsilon > 0 ? "+" : "-")
                << "A_sigma')=" << determinant(sym) << "\n";
      break;
    }
    default:
      throw Error(errc::schema_error,
                  "invariants expects a seifert or spin-input document");
  }
  return kExitOk;
}

int cmd_oracle(const std::string& path, long max_entry, std::size_t max_size) {
  Document doc = read_document_file(path);
  SearchBudget budget{max_entry, max_size};
  if (doc.kind == Document::Kind::matrix) {
    auto witness = search_null_cobordant(std::get<IntMatrix>(doc.payload),
                                         budget);
    if (!witness) {
      std::cout << "unknown: no witness within budget (max-entry "
                << max_entry << ")\n";
      return kExitInputFailure;
    }
    emit("", Document{Document::Kind::matrix, kDocumentVersion, *witness});
    return kExitOk;
  }
  if (doc.kind == Document::Kind::certificate) {
    bool ok = cross_validate(std::get<SliceCertificate>(doc.payload), budget);
    std::cout << (ok ? "agreed\n" : "disagreed\n");
    return ok ? kExitOk : kExitInputFailure;
  }
  throw Error(errc::schema_error,
              "oracle expects a matrix or certificate document");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame-spun knot Seifert matrices and slice certificates"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  long max_entry = 3;
  std::size_t max_size = 4;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a document");
  validate_cmd->add_option("file", in_path)->required();
  auto* spin_cmd = app.add_subcommand("spin", "assemble the frame-spun Seifert matrix");
  spin_cmd->add_option("file", in_path)->required();
  spin_cmd->add_option("-o,--output", out_path);
  auto* certify_cmd = app.add_subcommand("certify", "produce a slice certificate");
  certify_cmd->add_option("file", in_path)->required();
  certify_cmd->add_option("-o,--output", out_path);
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a certificate");
  verify_cmd->add_option("file", in_path)->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "report invariants");
  invariants_cmd->add_option("file", in_path)->required();
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force witness search");
  oracle_cmd->add_option("file", in_path)->required();
  oracle_cmd->add_option("--max-entry", max_entry);
  oracle_cmd->add_option("--max-size", max_size);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(in_path);
    if (spin_cmd->parsed()) return cmd_spin(in_path, out_path);
    if (certify_cmd->parsed()) return cmd_certify(in_path, out_path);
    if (verify_cmd->parsed()) return cmd_verify(in_path);
    if (invariants_cmd->parsed()) return cmd_invariants(in_path);
    if (oracle_cmd->parsed()) return cmd_oracle(in_path, max_entry, max_size);
  } catch (const spincert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == spincert::errc::internal_error ? kExitInternalError
                                                      : kExitInputFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}
