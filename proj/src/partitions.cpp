#include <algorithm>
#include <fstream>
#include <sstream>

#include "procco/errors.hpp"
#include "procco/schema.hpp"

namespace procco {

PartitionConfig PartitionConfig::defaults() {
  PartitionConfig cfg;
  const auto builtin = builtin_schema().partitions();
  cfg.partitions_.assign(builtin.begin(), builtin.end());
  std::sort(cfg.partitions_.begin(), cfg.partitions_.end(),
            [](const Partition& a, const Partition& b) { return a.parent < b.parent; });
  return cfg;
}

void PartitionConfig::set(Term parent, bool disjoint, bool complete) {
  const auto& schema = builtin_schema();
  auto children = schema.children_of(parent);
  if (children.empty()) {
    throw Error(ErrorCode::config,
                "'" + std::string(schema.name(parent)) + "' has no taxonomic children");
  }
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), parent,
                             [](const Partition& p, Term t) { return p.parent < t; });
  if (it != partitions_.end() && it->parent == parent) {
    it->disjoint = disjoint;
    it->complete = complete;
  } else {
    partitions_.insert(it, Partition{parent, std::move(children), disjoint, complete});
  }
}

const Partition* PartitionConfig::find(Term parent) const {
  auto it = std::find_if(partitions_.begin(), partitions_.end(),
                         [&](const Partition& p) { return p.parent == parent; });
  return it == partitions_.end() ? nullptr : &*it;
}

PartitionConfig PartitionConfig::parse(std::string_view text) {
  PartitionConfig cfg = defaults();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line) {
      if (c == ',' || c == '{' || c == '}' || c == '+' || c == '\r') c = ' ';
    }
    auto eq = line.find('=');
    std::istringstream words(line.substr(0, eq == std::string::npos ? line.size() : eq));
    std::string key;
    if (!(words >> key)) {
      if (eq == std::string::npos) continue;  // blank
      throw Error(ErrorCode::config, "missing parent term before '='", lineno);
    }
    if (eq == std::string::npos) throw Error(ErrorCode::config, "expected '='", lineno);
    std::string extra;
    if (words >> extra) throw Error(ErrorCode::config, "unexpected '" + extra + "'", lineno);

    auto parent = builtin_schema().find_term(key);
    if (!parent) throw Error(ErrorCode::config, "unknown term kind '" + key + "'", lineno);

    std::optional<bool> disjoint, complete;
    std::istringstream values(line.substr(eq + 1));
    std::string word;
    while (values >> word) {
      std::optional<bool>* slot = nullptr;
      bool value = false;
      if (word == "disjoint" || word == "overlapping") {
        slot = &disjoint;
        value = word == "disjoint";
      } else if (word == "complete" || word == "incomplete") {
        slot = &complete;
        value = word == "complete";
      } else {
        throw Error(ErrorCode::config, "unknown label '" + word + "'", lineno);
      }
      if (slot->has_value()) throw Error(ErrorCode::config, "repeated label '" + word + "'", lineno);
      *slot = value;
    }
    if (!disjoint || !complete) {
      throw Error(ErrorCode::config,
                  "expected one of disjoint|overlapping and one of complete|incomplete", lineno);
    }
    try {
      cfg.set(*parent, *disjoint, *complete);
    } catch (const Error& e) {
      throw Error(ErrorCode::config, "'" + key + "' has no taxonomic children", lineno);
    }
  }
  return cfg;
}

PartitionConfig PartitionConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::config, "cannot read partition file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace procco
