#include "hadscheme/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hadscheme {

namespace {

// tokens with '#' comments stripped
std::vector<std::string> tokenize(std::istream &in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back(t);
  }
  return toks;
}

int to_int(const std::string &t, const char *what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception &) {
    throw Error(ErrorCode::ParseError,
                std::string("expected ") + what + ", got '" + t + "'");
  }
}

} // namespace

AssociationScheme read_scheme(std::istream &in) {
  auto toks = tokenize(in);
  if (toks.size() < 2) throw Error(ErrorCode::ParseError, "missing header");
  int n = to_int(toks[0], "point count");
  int r = to_int(toks[1], "relation count");
  if (n < 1) throw Error(ErrorCode::ParseError, "point count must be positive");
  if ((int)toks.size() != 2 + n * n)
    throw Error(ErrorCode::ParseError,
                "expected " + std::to_string(n * n) + " labels, got " +
                    std::to_string(toks.size() - 2));
  std::vector<int> rel;
  rel.reserve((std::size_t)n * n);
  for (int i = 0; i < n * n; ++i) rel.push_back(to_int(toks[2 + i], "label"));
  AssociationScheme s = verify_scheme(n, std::move(rel));
  if (s.r != r)
    throw Error(ErrorCode::ParseError,
                "header says " + std::to_string(r) + " relations, matrix has " +
                    std::to_string(s.r));
  return s;
}

void write_scheme(std::ostream &out, const AssociationScheme &s) {
  out << s.n << ' ' << s.r << '\n';
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      if (y) out << ' ';
      out << s.rel_at(x, y);
    }
    out << '\n';
  }
}

void write_cover_scheme(std::ostream &out, const CoverScheme &cs) {
  int k = cs.base_rank;
  out << cs.scheme.n << ' ' << cs.scheme.r << '\n';
  out << "# labels: 1=t~ 2.." << k << "=s~ " << k + 1 << "=r+ " << k + 2
      << "=r-\n";
  for (int x = 0; x < cs.scheme.n; ++x) {
    for (int y = 0; y < cs.scheme.n; ++y) {
      if (y) out << ' ';
      out << cs.scheme.rel_at(x, y);
    }
    out << '\n';
  }
}

HadamardMatrix read_hadamard(std::istream &in) {
  auto toks = tokenize(in);
  if (toks.empty()) throw Error(ErrorCode::ParseError, "missing header");
  int n = to_int(toks[0], "order");
  if (n < 1) throw Error(ErrorCode::ParseError, "order must be positive");
  std::vector<std::vector<int>> entries;
  std::vector<int> row;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const std::string &t = toks[i];
    bool signs_only = true;
    for (char c : t)
      if (c != '+' && c != '-') signs_only = false;
    if (signs_only && t.size() > 1) {
      for (char c : t) row.push_back(c == '+' ? 1 : -1);
    } else if (t == "+" || t == "1" || t == "+1") {
      row.push_back(1);
    } else if (t == "-" || t == "-1") {
      row.push_back(-1);
    } else {
      throw Error(ErrorCode::ParseError, "bad entry token '" + t + "'");
    }
    while ((int)row.size() >= n) {
      entries.emplace_back(row.begin(), row.begin() + n);
      row.erase(row.begin(), row.begin() + n);
    }
  }
  if (!row.empty() || (int)entries.size() != n)
    throw Error(ErrorCode::ParseError,
                "expected " + std::to_string(n) + " rows of " +
                    std::to_string(n) + " entries");
  return verify_hadamard(entries);
}

void write_hadamard(std::ostream &out, const HadamardMatrix &h) {
  out << h.n << '\n';
  for (int x = 0; x < h.n; ++x) {
    for (int y = 0; y < h.n; ++y) out << (h.entry(x, y) > 0 ? '+' : '-');
    out << '\n';
  }
}

namespace {

template <class T, class Fn> T read_via(const std::string &path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return fn(in);
  } catch (Error &e) {
    std::string msg = e.what();
    std::string prefix = std::string(error_code_name(e.code)) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
    throw Error(e.code, path + ": " + msg);
  }
}

template <class Fn> void write_via(const std::string &path, Fn fn) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot open " + path);
  fn(out);
  if (!out) throw Error(ErrorCode::ParseError, "write failed on " + path);
}

} // namespace

AssociationScheme read_scheme_file(const std::string &path) {
  return read_via<AssociationScheme>(path,
                                     [](std::istream &in) { return read_scheme(in); });
}
void write_scheme_file(const std::string &path, const AssociationScheme &s) {
  write_via(path, [&](std::ostream &out) { write_scheme(out, s); });
}
void write_cover_scheme_file(const std::string &path, const CoverScheme &cs) {
  write_via(path, [&](std::ostream &out) { write_cover_scheme(out, cs); });
}
HadamardMatrix read_hadamard_file(const std::string &path) {
  return read_via<HadamardMatrix>(path,
                                  [](std::istream &in) { return read_hadamard(in); });
}
void write_hadamard_file(const std::string &path, const HadamardMatrix &h) {
  write_via(path, [&](std::ostream &out) { write_hadamard(out, h); });
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a64(const std::string &bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace hadscheme
