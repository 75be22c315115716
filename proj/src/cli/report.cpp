#include <cstdio>
#include <sstream>

#include "stonework/cli.hpp"

namespace stonework::cli {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["module"] = module;
  j["operation"] = operation;
  j["input_digest"] = input_digest;
  j["result"] = result;
  return j;
}

Report Report::from_json(const Json& j) {
  return Report{j.at("command").get<std::string>(), j.at("module").get<std::string>(),
                j.at("operation").get<std::string>(), j.at("input_digest").get<std::string>(), j.at("result")};
}

namespace {

bool is_flat(const Json& v) {
  if (v.is_structured() && !v.is_array()) return false;
  if (v.is_array())
    for (const auto& x : v)
      if (x.is_structured()) return false;
  return true;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

std::string flat(const Json& v) {
  if (!v.is_array()) return scalar(v);
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
  return out + "]";
}

void render(std::ostringstream& out, const Json& v, std::size_t indent) {
  std::string pad(indent, ' ');
  auto entry = [&](const std::string& key, const Json& x) {
    if (is_flat(x)) {
      out << pad << key << ": " << flat(x) << '\n';
    } else {
      out << pad << key << ":\n";
      render(out, x, indent + 2);
    }
  };
  if (v.is_object()) {
    for (const auto& [key, x] : v.items()) entry(key, x);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) entry("[" + std::to_string(i) + "]", v[i]);
  } else {
    out << pad << scalar(v) << '\n';
  }
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  out << "module: " << module << '\n';
  out << "operation: " << operation << '\n';
  out << "input_digest: " << input_digest << '\n';
  if (is_flat(result)) {
    out << "result: " << flat(result) << '\n';
  } else {
    out << "result:\n";
    render(out, result, 2);
  }
  return out.str();
}

}  // namespace stonework::cli
