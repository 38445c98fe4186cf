#pragma once
#include <string>

#include "fmb/catalog.hpp"
#include "fmb/verify.hpp"

namespace fmb {

// Line-oriented text certificate:
//   FMB-CERT v1
//   field p=<p> k=<k> modulus=<c0,c1,...>
//   group <name>            (or: group inline / gen... / comm... / endgroup)
//   order <N>
//   N lines of N field tokens (decimal codes, low-degree-first digits)
//   claim basis
struct Certificate {
  Field field;
  std::string group_name;  // empty for inline presentations
  GroupSpec inline_spec;
  bool is_inline = false;
  int order = 0;
  BasisCandidate basis;
  std::string claim = "basis";
};

Certificate make_certificate(const Group& g, const Field& f, const BasisCandidate& basis,
                             bool embed_presentation = false);

void cert_write(const std::string& path, const Certificate& cert);

// Throws ParseError (with a line number) or VersionMismatch.
Certificate cert_read(const std::string& path);

// Builds the certified group, from the catalog or the embedded presentation.
Group cert_group(const Certificate& cert);

}  // namespace fmb
