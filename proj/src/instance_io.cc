// Copyright 2026 The FTFP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ftfp/instance_io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ftfp/errors.h"

namespace ftfp {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> Tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    Line line{number, {}};
    for (std::string tok; fields >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double ToReal(const Line& line, const std::string& tok) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "not a number: '" + tok + "'");
  }
  return value;
}

long ToInt(const Line& line, const std::string& tok) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "not an integer: '" + tok + "'");
  }
  return value;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& Next(const char* expecting) {
    if (pos_ >= lines_.size()) {
      const int last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(last + 1, std::string("unexpected end of input, expecting ") + expecting);
    }
    return lines_[pos_++];
  }

  // A line "<keyword> v1 v2 ..." with exactly `count` values.
  const Line& Keyword(const char* keyword, size_t count) {
    const Line& line = Next(keyword);
    if (line.tokens[0] != keyword) {
      throw ParseError(line.number, std::string("expected '") + keyword + "', got '" +
                                        line.tokens[0] + "'");
    }
    if (line.tokens.size() != count + 1) {
      throw ParseError(line.number, std::string("'") + keyword + "' expects " +
                                        std::to_string(count) + " values, got " +
                                        std::to_string(line.tokens.size() - 1));
    }
    return line;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

 private:
  std::vector<Line> lines_;
  size_t pos_ = 0;
};

}  // namespace

std::string FormatReal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

Instance ParseInstance(const std::string& text) {
  Reader reader(Tokenize(text));
  {
    const Line& header = reader.Keyword("ftfp", 1);
    if (header.tokens[1] != "1") {
      throw ParseError(header.number, "unsupported format version " + header.tokens[1]);
    }
  }
  const Line& fl = reader.Keyword("facilities", 1);
  const long m = ToInt(fl, fl.tokens[1]);
  if (m < 1) throw ParseError(fl.number, "need at least one facility");
  const Line& cl = reader.Keyword("clients", 1);
  const long n = ToInt(cl, cl.tokens[1]);
  if (n < 1) throw ParseError(cl.number, "need at least one client");

  std::vector<double> costs;
  const Line& fc = reader.Keyword("fcost", m);
  for (long i = 0; i < m; ++i) costs.push_back(ToReal(fc, fc.tokens[i + 1]));

  std::vector<int> req;
  const Line& rq = reader.Keyword("req", n);
  for (long j = 0; j < n; ++j) {
    const long r = ToInt(rq, rq.tokens[j + 1]);
    if (r < 1) throw ParseError(rq.number, "requirements must be positive");
    req.push_back(static_cast<int>(r));
  }

  reader.Keyword("dist", 0);
  std::vector<double> dist;
  dist.reserve(static_cast<size_t>(m) * n);
  for (long j = 0; j < n; ++j) {
    const Line& row = reader.Next("a distance row");
    if (static_cast<long>(row.tokens.size()) != m) {
      throw ParseError(row.number, "distance row for client " + std::to_string(j) + " has " +
                                       std::to_string(row.tokens.size()) + " values, expected " +
                                       std::to_string(m));
    }
    for (const auto& tok : row.tokens) dist.push_back(ToReal(row, tok));
  }
  if (!reader.done()) throw ParseError(reader.peek().number, "trailing content");
  return Instance(std::move(costs), std::move(req), std::move(dist));
}

std::string FormatInstance(const Instance& inst) {
  std::string out = "ftfp 1\n";
  out += "facilities " + std::to_string(inst.num_facilities()) + "\n";
  out += "clients " + std::to_string(inst.num_clients()) + "\n";
  out += "fcost";
  for (double f : inst.facility_costs()) out += " " + FormatReal(f);
  out += "\nreq";
  for (int r : inst.requirements()) out += " " + std::to_string(r);
  out += "\ndist\n";
  for (int j = 0; j < inst.num_clients(); ++j) {
    for (int i = 0; i < inst.num_facilities(); ++i) {
      if (i > 0) out += ' ';
      out += FormatReal(inst.distance(j, i));
    }
    out += '\n';
  }
  return out;
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

void SaveInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << FormatInstance(inst);
}

}  // namespace ftfp
