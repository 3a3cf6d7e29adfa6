#include "hetero/model_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "hetero/error.hpp"
#include "hetero/expression.hpp"

namespace hetero {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column()); }

  std::string identifier(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(std::string("expected ") + what);
    std::size_t start = pos_;
    while (pos_ < text_.size() && (is_ident_char(text_[pos_]) || text_[pos_] == '-')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) fail("number too large");
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  /// The rest of the line and its starting column.
  std::pair<std::string_view, int> rest() {
    skip_space();
    int col = column();
    std::string_view r = text_.substr(pos_);
    pos_ = text_.size();
    if (r.empty()) fail("expected an expression");
    return {r, col};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

KForm parse_form(LineCursor& cursor, const ModelFile& file, int degree, const char* what) {
  auto [text, col] = cursor.rest();
  ExpressionOptions options;
  options.dim = file.dim;
  options.declared = &file.params;
  options.line = cursor.line();
  options.column = col;
  KForm form = parse_form_expression(text, options);
  if (form.is_zero()) return KForm(file.dim, degree);
  if (form.degree() != degree)
    throw ParseError(std::string(what) + " must be a " + std::to_string(degree) + "-form, got degree " +
                         std::to_string(form.degree()),
                     cursor.line(), col);
  return form;
}

int frame_index(LineCursor& cursor, const ModelFile& file) {
  int col = cursor.column();
  int k = cursor.integer("a frame index");
  if (k < 1 || k > file.dim)
    throw ParseError("frame index " + std::to_string(k) + " outside 1.." + std::to_string(file.dim),
                     cursor.line(), col);
  return k;
}

}  // namespace

Assignment parse_assignment(std::string_view text, int line, int column) {
  Assignment out;
  std::size_t pos = 0;
  auto col_of = [&](std::size_t p) { return column + static_cast<int>(p); };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size()) throw ParseError("expected name=value", line, col_of(pos));
  while (true) {
    skip();
    std::size_t start = pos;
    if (pos >= text.size() || !is_ident_start(text[pos]))
      throw ParseError("expected a parameter name", line, col_of(pos));
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    std::string name(text.substr(start, pos - start));
    if (is_basis_symbol(name))
      throw ParseError("'" + name + "' is a basis symbol, not a parameter", line, col_of(start));
    if (out.count(name)) throw ParseError("parameter '" + name + "' assigned twice", line, col_of(start));
    skip();
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", line, col_of(pos));
    ++pos;
    skip();
    std::size_t vstart = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    std::string value(text.substr(vstart, pos - vstart));
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
    try {
      out[name] = parse_rational(value);
    } catch (const Error&) {
      throw ParseError("invalid rational value '" + value + "'", line, col_of(vstart));
    }
    if (pos >= text.size()) break;
    ++pos;  // comma
  }
  return out;
}

std::string format_assignment(const Assignment& values, const std::vector<std::string>& order) {
  std::vector<std::string> keys;
  for (const auto& k : order)
    if (values.count(k)) keys.push_back(k);
  for (const auto& [k, v] : values)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += ", ";
    out += k + "=" + to_string(values.at(k));
  }
  return out;
}

ModelFile parse_model(std::string_view text) {
  ModelFile file;
  bool have_dim = false;
  bool have_params = false;
  bool have_structure = false;
  bool have_forms = false;
  std::set<int> seen_frames;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineCursor cursor(line, line_no);
    if (cursor.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const int key_col = cursor.column();
    const std::string key = cursor.identifier("a key");
    if (!have_dim && key != "dim") throw ParseError("the first entry must be 'dim'", line_no, key_col);

    if (key == "dim") {
      if (have_dim) throw ParseError("duplicate 'dim'", line_no, key_col);
      int col = cursor.column();
      file.dim = cursor.integer("a dimension");
      if (file.dim != 7 && file.dim != 8) throw ParseError("dim must be 7 or 8", line_no, col);
      have_dim = true;
    } else if (key == "params") {
      if (have_params) throw ParseError("duplicate 'params'", line_no, key_col);
      if (have_forms || have_structure)
        throw ParseError("'params' must precede structure and form entries", line_no, key_col);
      while (!cursor.at_end()) {
        int col = cursor.column();
        std::string name = cursor.identifier("a parameter name");
        if (name.find('-') != std::string::npos || is_basis_symbol(name))
          throw ParseError("invalid parameter name '" + name + "'", line_no, col);
        if (std::find(file.params.begin(), file.params.end(), name) != file.params.end())
          throw ParseError("parameter '" + name + "' declared twice", line_no, col);
        file.params.push_back(name);
      }
      have_params = true;
    } else if (key == "structure") {
      if (have_structure) throw ParseError("duplicate 'structure'", line_no, key_col);
      if (cursor.peek('=')) {
        cursor.expect('=');
        file.structure = ModelFile::Structure::Explicit;
        file.structure_form = parse_form(cursor, file, file.dim == 7 ? 3 : 4, "the structure form");
      } else {
        int col = cursor.column();
        std::string sel = cursor.identifier("g2-standard, spin7-standard or '='");
        if (sel == "g2-standard" && file.dim == 7) {
          file.structure = ModelFile::Structure::G2Standard;
        } else if (sel == "spin7-standard" && file.dim == 8) {
          file.structure = ModelFile::Structure::Spin7Standard;
        } else {
          throw ParseError("structure '" + sel + "' does not fit dim " + std::to_string(file.dim),
                           line_no, col);
        }
      }
      have_structure = true;
    } else if (key == "d") {
      int col = cursor.column();
      std::string frame = cursor.identifier("a frame symbol eK");
      if (frame.size() < 2 || frame[0] != 'e' ||
          !std::all_of(frame.begin() + 1, frame.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a frame symbol eK", line_no, col);
      int k = std::stoi(frame.substr(1));
      if (k < 1 || k > file.dim)
        throw ParseError("frame index " + std::to_string(k) + " outside 1.." + std::to_string(file.dim),
                         line_no, col + 1);
      if (!seen_frames.insert(k).second) throw ParseError("duplicate entry for d " + frame, line_no, col);
      cursor.expect('=');
      KForm f = parse_form(cursor, file, 2, "a structure equation");
      // `d eK = 0` is the default; keep only nonzero entries so printing is canonical.
      if (!f.is_zero()) file.differentials[k] = std::move(f);
      have_forms = true;
    } else if (key == "instanton") {
      cursor.expect('(');
      int i = frame_index(cursor, file);
      cursor.expect(',');
      int j = frame_index(cursor, file);
      cursor.expect(')');
      if (i == j) throw ParseError("instanton entry needs two distinct indices", line_no, key_col);
      cursor.expect('=');
      KForm f = parse_form(cursor, file, 1, "an instanton entry");
      if (i > j) {
        std::swap(i, j);
        f = -f;
      }
      if (file.instanton.count({i, j}))
        throw ParseError("duplicate instanton entry for (" + std::to_string(i) + "," + std::to_string(j) + ")",
                         line_no, key_col);
      file.instanton[{i, j}] = std::move(f);
      have_forms = true;
    } else if (key == "eval") {
      auto [rest, col] = cursor.rest();
      Assignment a = parse_assignment(rest, line_no, col);
      for (const auto& [name, v] : a)
        if (std::find(file.params.begin(), file.params.end(), name) == file.params.end())
          throw ParseError("undeclared parameter '" + name + "' in eval", line_no, col);
      file.eval_points.push_back(std::move(a));
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, key_col);
    }
    if (!cursor.at_end()) cursor.fail("unexpected trailing text");
    if (end == text.size()) break;
  }
  if (!have_dim) throw ParseError("missing 'dim'", line_no, 1);
  if (!have_structure)
    file.structure = file.dim == 7 ? ModelFile::Structure::G2Standard : ModelFile::Structure::Spin7Standard;
  // Zero instanton entries carry no information; drop them so printing is canonical.
  for (auto it = file.instanton.begin(); it != file.instanton.end();)
    it = it->second.is_zero() ? file.instanton.erase(it) : std::next(it);
  require_closure(to_model(file));
  return file;
}

std::string print_model(const ModelFile& file) {
  std::ostringstream out;
  out << "dim " << file.dim << "\n";
  if (!file.params.empty()) {
    out << "params";
    for (const auto& p : file.params) out << " " << p;
    out << "\n";
  }
  switch (file.structure) {
    case ModelFile::Structure::G2Standard: out << "structure g2-standard\n"; break;
    case ModelFile::Structure::Spin7Standard: out << "structure spin7-standard\n"; break;
    case ModelFile::Structure::Explicit:
      out << "structure = " << file.structure_form.to_string(file.params) << "\n";
      break;
  }
  for (const auto& [k, f] : file.differentials)
    out << "d e" << k << " = " << f.to_string(file.params) << "\n";
  for (const auto& [ij, f] : file.instanton)
    out << "instanton (" << ij.first << "," << ij.second << ") = " << f.to_string(file.params) << "\n";
  for (const auto& a : file.eval_points) out << "eval " << format_assignment(a, file.params) << "\n";
  return out.str();
}

LieAlgebraModel to_model(const ModelFile& file) {
  std::vector<KForm> d(static_cast<std::size_t>(file.dim), KForm(file.dim, 2));
  for (const auto& [k, f] : file.differentials) d[static_cast<std::size_t>(k - 1)] = f;
  return LieAlgebraModel(file.dim, file.params, std::move(d));
}

GStructure to_structure(const ModelFile& file) {
  switch (file.structure) {
    case ModelFile::Structure::G2Standard: return standard_g2();
    case ModelFile::Structure::Spin7Standard: return standard_spin7();
    case ModelFile::Structure::Explicit:
      return file.dim == 7 ? GStructure::g2(file.structure_form) : GStructure::spin7(file.structure_form);
  }
  return standard_g2();
}

std::optional<Connection> to_instanton(const ModelFile& file) {
  if (file.instanton.empty()) return std::nullopt;
  Connection a(file.dim);
  for (const auto& [ij, f] : file.instanton) a.set_antisymmetric(ij.first, ij.second, f);
  return a;
}

VerifyInput to_verify_input(const ModelFile& file, std::string name, ConnectionChoice connection) {
  VerifyInput in;
  in.name = std::move(name);
  in.model = to_model(file);
  in.structure = to_structure(file);
  in.instanton = to_instanton(file);
  in.instanton_name = in.instanton ? "A" : "flat";
  in.connection = connection;
  in.eval_points = file.eval_points;
  in.parameter_order = file.params;
  return in;
}

}  // namespace hetero
