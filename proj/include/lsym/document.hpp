#ifndef LSYM_DOCUMENT_HPP
#define LSYM_DOCUMENT_HPP

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsym/bimodule.hpp"
#include "lsym/cochain.hpp"

namespace lsym {

/// One problem found in an input document; `path` is a JSON pointer.
struct Diagnostic {
  std::string path;
  std::string reason;
};

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<Diagnostic> diags);
  DocumentError(std::string path, std::string reason) : DocumentError(std::vector<Diagnostic>{{std::move(path), std::move(reason)}}) {}
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

/// One elementary piece of a cochain: monomial ⊗ last ↦ value.
struct CochainRecord {
  std::vector<std::size_t> monomial;
  std::optional<std::size_t> last;  // absent only for C⁰ cochains
  Vec value;
  std::optional<Degree> degree;
};

struct CochainData {
  std::string module;  // empty: the regular bimodule
  std::vector<CochainRecord> records;
  std::string path;    // JSON pointer of the record list, for diagnostics
  /// Arity implied by the records, if any are present.
  std::optional<std::size_t> arity() const;
};

enum class FieldMode { rational, gaussian };

/*
 * Input document:
 *   field, group.factors, epsilon.matrix, basis [{name, degree}],
 *   products [{left, right, value {name: scalar}}],
 *   modules {name: module}, cochains {name: [record]},
 *   family [names], series [names], equivalence {f, g, phi: [names]}.
 * Unlisted products are zero.
 */
struct Document {
  FieldMode field = FieldMode::gaussian;
  GradedAlgebra algebra;
  std::vector<std::pair<std::string, Bimodule>> modules;
  std::vector<std::pair<std::string, CochainData>> cochains;
  std::vector<std::string> family;
  std::vector<std::string> series;
  struct Equivalence {
    std::vector<std::string> f, g, phi;
  };
  std::optional<Equivalence> equivalence;

  const Bimodule* module(const std::string& name) const;
  const CochainData* cochain(const std::string& name) const;
};

Document parse_document(std::string_view text);
Document load_document(const std::string& file);

/// Module JSON {basis, left: [{algebra, module, value}], right: [{module, algebra, value}]}.
Bimodule parse_module(const nlohmann::json& j, const GradedAlgebra& a, FieldMode field, const std::string& path);

nlohmann::ordered_json document_to_json(const Document& d);
/// Canonical text: printing a parsed canonical document reproduces it byte for byte.
std::string print_document(const Document& d);

nlohmann::ordered_json algebra_to_json(const GradedAlgebra& a);
nlohmann::ordered_json module_to_json(const Bimodule& m);
nlohmann::ordered_json vector_to_json(const Vec& v, const std::vector<BasisElement>& basis);
nlohmann::ordered_json degree_to_json(const Degree& d);

/// Coordinates of a document cochain in C^n; throws DocumentError on inconsistent records.
Vec cochain_coordinates(const CochainComplex& c, const CochainData& d, std::size_t arity);
/// Records of a cochain in C^n (C⁰ coordinates are expanded into M).
nlohmann::ordered_json cochain_to_json(const CochainComplex& c, std::size_t n, const Vec& f);
std::vector<CochainRecord> cochain_records(const CochainComplex& c, std::size_t n, const Vec& f);

}  // namespace lsym

#endif  // LSYM_DOCUMENT_HPP
