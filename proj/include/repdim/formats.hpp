#pragma once

// Text documents for algebras, modules, groups, extensions, certificates and
// reports. Documents are JSON objects tagged by "type"; integers are decimal
// and reduced mod p on load.

#include <string>
#include <variant>

#include "repdim/engine.hpp"

namespace repdim {

struct Certificate {
  Extension ext;
  std::variant<SplitCert, SeparabilityCert, SummandCert, FrobeniusSystem> payload;
};
std::string certificate_kind(const Certificate& c);
ValidationReport verify(const Certificate& c);

std::string to_document(const Algebra& a);
std::string to_document(const Module& m);
std::string to_document(const FiniteGroup& g);
std::string to_document(const Extension& e);
std::string to_document(const Certificate& c);
std::string to_document(const RepdimReport& r);

/// Each loader throws Error(Parse) naming the line of a syntax error or the
/// path of the offending field, and Error(Invalid) when the content fails
/// validation (e.g. a non-associative table).
Algebra algebra_from_document(const std::string& text);
Module module_from_document(const std::string& text);
/// Accepts a Cayley table, permutation generators ("degree", "generators")
/// or a gallery name.
FiniteGroup group_from_document(const std::string& text);
Extension extension_from_document(const std::string& text);
Certificate certificate_from_document(const std::string& text);
RepdimReport report_from_document(const std::string& text);

/// Re-renders any JSON text in the document layout (sorted keys, scalar
/// arrays on one line).
std::string normalize_document(const std::string& text);

/// The "type" tag of a document.
std::string document_type(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace repdim
