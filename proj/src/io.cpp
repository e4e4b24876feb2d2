#include "qcorona/io.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "json_codec.hpp"

namespace qcorona::io {

namespace {

std::string escape_key(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Input iterator over the raw text that remembers the line of the last
// non-whitespace character the JSON lexer consumed.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  struct State {
    std::size_t line = 1;
    std::size_t token_line = 1;
  };

  TrackingIterator(const char* p, State* state) : p_(p), state_(state) {}

  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    if (*p_ == '\n') {
      ++state_->line;
    } else if (*p_ != ' ' && *p_ != '\t' && *p_ != '\r') {
      state_->token_line = state_->line;
    }
    ++p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_;
  State* state_;
};

// Records the source line of every value, keyed by JSON pointer.
class LineRecorder : public nlohmann::json_sax<Json> {
 public:
  explicit LineRecorder(const TrackingIterator::State* state) : state_(state) {}

  std::map<std::string, std::size_t> lines;

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override {
    record();
    stack_.push_back({false, 0, {}});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return advance();
  }
  bool start_array(std::size_t) override {
    record();
    stack_.push_back({true, 0, {}});
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return advance();
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  struct Frame {
    bool is_array;
    std::size_t index;
    std::string key;
  };

  bool value() {
    record();
    return advance();
  }

  void record() {
    std::string path;
    for (const auto& f : stack_) {
      path += "/";
      path += f.is_array ? std::to_string(f.index) : escape_key(f.key);
    }
    lines.emplace(path, state_->token_line);
  }

  bool advance() {
    if (!stack_.empty() && stack_.back().is_array) ++stack_.back().index;
    return true;
  }

  const TrackingIterator::State* state_;
  std::vector<Frame> stack_;
};

class Document {
 public:
  Document(const std::string& text, std::string source) : source_(std::move(source)) {
    try {
      root_ = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(source_, line_of_byte(text, e.byte), "invalid JSON: " + std::string(e.what()));
    }
    TrackingIterator::State state;
    LineRecorder recorder(&state);
    Json::sax_parse(TrackingIterator(text.data(), &state),
                    TrackingIterator(text.data() + text.size(), &state), &recorder);
    lines_ = std::move(recorder.lines);
  }

  const Json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    std::string p = path;
    while (true) {
      if (auto it = lines_.find(p); it != lines_.end()) throw ParseError(source_, it->second, message);
      if (p.empty()) break;
      p.erase(p.rfind('/'));
    }
    throw ParseError(source_, 1, message);
  }

  void require_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) const {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      if (!allowed.contains(k)) fail(path + "/" + escape_key(k), "unknown field '" + k + "'");
    }
    for (const auto& k : required) {
      if (!obj.contains(k)) fail(path, "missing field '" + k + "'");
    }
  }

  Rat rat(const Json& v, const std::string& path) const {
    try {
      if (v.is_string()) return parse_rat(v.get<std::string>());
      if (v.is_number_integer()) return parse_rat(v.dump());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
    if (v.is_number_float()) fail(path, "non-exact number " + v.dump() + "; write rationals as \"p/q\"");
    fail(path, "expected a rational");
  }

  Quat quat(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected a quaternion [x0, x1, x2, x3]");
    if (v.size() != 4) {
      fail(path, "quaternion needs 4 components, got " + std::to_string(v.size()));
    }
    return {rat(v[0], path + "/0"), rat(v[1], path + "/1"), rat(v[2], path + "/2"), rat(v[3], path + "/3")};
  }

  HPoly hpoly(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected a coefficient list");
    std::vector<Quat> coeffs;
    for (std::size_t m = 0; m < v.size(); ++m) coeffs.push_back(quat(v[m], path + "/" + std::to_string(m)));
    return HPoly(std::move(coeffs));
  }

  CPoly cpoly(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected a coefficient list");
    std::vector<GaussRat> coeffs;
    for (std::size_t m = 0; m < v.size(); ++m) {
      const std::string p = path + "/" + std::to_string(m);
      if (!v[m].is_array() || v[m].size() != 2) fail(p, "expected [re, im]");
      coeffs.emplace_back(rat(v[m][0], p + "/0"), rat(v[m][1], p + "/1"));
    }
    return CPoly(std::move(coeffs));
  }

  std::vector<NamedPoly> poly_list(const std::string& key, const std::string& default_prefix) const {
    const std::string path = "/" + key;
    const Json& list = root_.at(key);
    if (!list.is_array()) fail(path, "'" + key + "' must be a list");
    if (list.empty()) fail(path, "'" + key + "' is empty");
    std::vector<NamedPoly> out;
    std::set<std::string> names;
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
      const std::string p = path + "/" + std::to_string(idx);
      const Json& entry = list[idx];
      require_keys(entry, p, {"name", "coeffs"}, {"coeffs"});
      std::string name = default_prefix + std::to_string(idx + 1);
      if (entry.contains("name")) {
        if (!entry["name"].is_string()) fail(p + "/name", "name must be a string");
        name = entry["name"].get<std::string>();
      }
      if (!names.insert(name).second) fail(p + "/name", "duplicate name '" + name + "'");
      out.push_back({name, hpoly(entry["coeffs"], p + "/coeffs")});
    }
    return out;
  }

  FullRankCertificate certificate() const {
    const std::string path = "/certificate";
    const Json& c = root_.at("certificate");
    require_keys(c, path, {"minors"}, {"minors"});
    if (!c["minors"].is_array()) fail(path + "/minors", "expected a list");
    FullRankCertificate cert;
    for (std::size_t k = 0; k < c["minors"].size(); ++k) {
      const std::string p = path + "/minors/" + std::to_string(k);
      const Json& e = c["minors"][k];
      require_keys(e, p, {"columns", "minor", "witness"}, {"columns", "minor", "witness"});
      if (!e["columns"].is_array()) fail(p + "/columns", "expected a list of column indices");
      std::vector<std::size_t> cols;
      for (std::size_t q = 0; q < e["columns"].size(); ++q) {
        const Json& col = e["columns"][q];
        if (!col.is_number_unsigned()) fail(p + "/columns/" + std::to_string(q), "expected a column index");
        cols.push_back(col.get<std::size_t>());
      }
      cert.minor_columns.push_back(std::move(cols));
      cert.minors.push_back(cpoly(e["minor"], p + "/minor"));
      cert.witnesses.push_back(cpoly(e["witness"], p + "/witness"));
    }
    return cert;
  }

 private:
  static std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    const std::size_t end = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
  }

  std::string source_;
  Json root_;
  std::map<std::string, std::size_t> lines_;
};

Json named_polys_json(const std::vector<NamedPoly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) {
    out.push_back(Json{{"name", p.name}, {"coeffs", hpoly_coeffs_json(p.poly)}});
  }
  return out;
}

}  // namespace

std::vector<HPoly> Instance::polys() const {
  std::vector<HPoly> out;
  for (const auto& p : polynomials) out.push_back(p.poly);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance parse_instance_text(const std::string& text, const std::string& source) {
  const Document doc(text, source);
  doc.require_keys(doc.root(), "", {"polynomials"}, {"polynomials"});
  return {doc.poly_list("polynomials", "f")};
}

Instance parse_instance(const std::string& path) { return parse_instance_text(read_file(path), path); }

std::string serialize_instance(const Instance& inst) {
  Json root{{"polynomials", named_polys_json(inst.polynomials)}};
  return root.dump(2) + "\n";
}

SolutionFile parse_solution_text(const std::string& text, const std::string& source) {
  const Document doc(text, source);
  doc.require_keys(doc.root(), "", {"polynomials", "solution", "certificate"}, {"polynomials", "solution"});
  SolutionFile out;
  out.instance.polynomials = doc.poly_list("polynomials", "f");
  out.solution = doc.poly_list("solution", "h");
  if (doc.root().contains("certificate")) out.certificate = doc.certificate();
  return out;
}

SolutionFile parse_solution(const std::string& path) { return parse_solution_text(read_file(path), path); }

std::string serialize_solution(const SolutionFile& sol) {
  Json root{{"polynomials", named_polys_json(sol.instance.polynomials)},
            {"solution", named_polys_json(sol.solution)}};
  if (sol.certificate) {
    Json minors = Json::array();
    for (std::size_t k = 0; k < sol.certificate->minors.size(); ++k) {
      minors.push_back(Json{{"columns", sol.certificate->minor_columns[k]},
                            {"minor", cpoly_coeffs_json(sol.certificate->minors[k])},
                            {"witness", cpoly_coeffs_json(sol.certificate->witnesses[k])}});
    }
    root["certificate"] = Json{{"minors", std::move(minors)}};
  }
  return root.dump(2) + "\n";
}

}  // namespace qcorona::io
