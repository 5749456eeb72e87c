#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "pstar/forms.hpp"

namespace pstar {

using Json = nlohmann::ordered_json;

/// A loaded algebra document: the validated algebra plus the named forms,
/// functionals and subspaces it carries.
struct Workspace {
  PartialStarAlgebra algebra;
  std::map<std::string, SesquiForm> forms;
  std::map<std::string, LinearFunctional> functionals;
  std::map<std::string, Subspace> subspaces;
};

/// Parses a document. Indices are 1-based in files and converted here; the
/// gamma table accepts either a full 0/1 matrix or the shorthand
/// {"universal_indices": [...]} meaning pairs with one member listed.
/// Throws ParseError on schema violations.
Workspace parse_document(const Json& doc);

/// parse_document + validate_algebra; throws ValidationFailure naming the
/// first failing check.
Workspace load_document(const Json& doc);

/// Reads and loads a file. ParseError when unreadable or invalid JSON.
Workspace load_file(const std::string& path);

/// Canonical serialization (full gamma matrix, structure sorted by (i, j),
/// complex entries as [re, im]); loading and re-emitting a canonical document
/// is byte-identical.
Json document_from_workspace(const Workspace& ws);

Json complex_to_json(const Complex& z);
Json vector_to_json(const CVector& v);
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

/// Shipped fixture documents.
Json full2_document();
Json qm2_document();
Json qm2_singular_document();

/// Writes full2.json, qm2.json, qm2-singular.json into `dir`; returns the
/// paths written.
std::vector<std::string> write_fixtures(const std::string& dir);

}  // namespace pstar
