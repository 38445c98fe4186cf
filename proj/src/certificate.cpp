#include "fmb/certificate.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fmb/error.hpp"

namespace fmb {
namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail("ParseError", "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Certificate make_certificate(const Group& g, const Field& f, const BasisCandidate& basis,
                             bool embed_presentation) {
  Certificate cert;
  cert.field = f;
  cert.is_inline = embed_presentation;
  cert.group_name = g.spec().name;
  if (embed_presentation) cert.inline_spec = g.spec();
  cert.order = g.order();
  cert.basis = basis;
  return cert;
}

void cert_write(const std::string& path, const Certificate& cert) {
  std::ofstream out(path);
  if (!out) fail("ParseError", "cannot open '" + path + "' for writing");
  out << "FMB-CERT v1\n";
  out << "field p=" << cert.field.p() << " k=" << cert.field.k() << " modulus=";
  for (size_t i = 0; i < cert.field.modulus().size(); ++i) {
    if (i) out << ",";
    out << cert.field.modulus()[i];
  }
  out << "\n";
  if (cert.is_inline) {
    out << "group inline\n";
    for (const auto& line : group_text(cert.inline_spec)) out << line << "\n";
    out << "endgroup\n";
  } else {
    out << "group " << cert.group_name << "\n";
  }
  out << "order " << cert.order << "\n";
  for (const Vec& v : cert.basis.elements) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out << " ";
      out << static_cast<int>(v[i]);
    }
    out << "\n";
  }
  out << "claim " << cert.claim << "\n";
}

Certificate cert_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    lines.push_back(line);
  }
  int ln = 0;
  auto next = [&]() -> const std::string& {
    if (ln >= static_cast<int>(lines.size())) parse_fail(ln + 1, "unexpected end of file");
    return lines[ln++];
  };

  Certificate cert;
  {
    const std::string& head = next();
    if (head != "FMB-CERT v1") {
      if (head.rfind("FMB-CERT", 0) == 0)
        fail("VersionMismatch", "unsupported certificate version '" + head + "'");
      parse_fail(1, "not a certificate file");
    }
  }
  {
    const std::string& fl = next();
    int p = 0, k = 0;
    char buf[256] = {0};
    if (std::sscanf(fl.c_str(), "field p=%d k=%d modulus=%255s", &p, &k, buf) != 3)
      parse_fail(ln, "malformed field line");
    std::vector<int> modulus;
    std::stringstream ss(buf);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        modulus.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        parse_fail(ln, "bad modulus coefficient '" + tok + "'");
      }
    }
    cert.field = field_make(p, k, &modulus);
  }
  {
    const std::string& gl = next();
    if (gl.rfind("group ", 0) != 0) parse_fail(ln, "expected a group line");
    std::string rest = gl.substr(6);
    if (rest == "inline") {
      cert.is_inline = true;
      std::vector<std::string> spec_lines;
      while (true) {
        const std::string& sl = next();
        if (sl == "endgroup") break;
        spec_lines.push_back(sl);
      }
      cert.inline_spec = parse_group_text(spec_lines, "inline");
      cert.group_name = cert.inline_spec.name;
    } else {
      cert.group_name = rest;
    }
  }
  {
    const std::string& ol = next();
    if (std::sscanf(ol.c_str(), "order %d", &cert.order) != 1 || cert.order < 1)
      parse_fail(ln, "malformed order line");
  }
  cert.basis.elements.reserve(cert.order);
  for (int r = 0; r < cert.order; ++r) {
    std::stringstream ss(next());
    Vec v;
    long long tok;
    while (ss >> tok) {
      if (tok < 0 || tok >= cert.field.q()) parse_fail(ln, "field token out of range");
      v.push_back(static_cast<Fel>(tok));
    }
    if (static_cast<int>(v.size()) != cert.order)
      parse_fail(ln, "expected " + std::to_string(cert.order) + " tokens");
    cert.basis.elements.push_back(std::move(v));
  }
  {
    const std::string& cl = next();
    if (cl.rfind("claim ", 0) != 0) parse_fail(ln, "expected a claim line");
    cert.claim = cl.substr(6);
  }
  cert.basis.source = "certificate " + path;
  return cert;
}

Group cert_group(const Certificate& cert) {
  Group g = cert.is_inline ? group_from_spec(cert.inline_spec)
                           : group_from_spec(catalog_lookup(cert.group_name));
  if (g.order() != cert.order)
    fail("ParseError", "certificate order disagrees with the group order");
  return g;
}

}  // namespace fmb
