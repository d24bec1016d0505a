// Copyright 2026 the serbest authors
// SPDX-License-Identifier: Apache-2.0

#include "serbest/feature_structure.hpp"

#include <algorithm>

namespace serbest {

FeatureStructure::FeatureStructure() = default;
FeatureStructure::~FeatureStructure() = default;
FeatureStructure::FeatureStructure(const FeatureStructure&) = default;
FeatureStructure::FeatureStructure(FeatureStructure&&) noexcept = default;
FeatureStructure& FeatureStructure::operator=(const FeatureStructure&) = default;
FeatureStructure& FeatureStructure::operator=(FeatureStructure&&) noexcept = default;

bool FeatureStructure::empty() const { return entries_.empty(); }
size_t FeatureStructure::size() const { return entries_.size(); }
const std::vector<FeatureStructure::Entry>& FeatureStructure::entries() const { return entries_; }

const Value* FeatureStructure::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e.value;
  }
  return nullptr;
}

Value* FeatureStructure::find(std::string_view name) {
  for (auto& e : entries_) {
    if (e.name == name) return &e.value;
  }
  return nullptr;
}

void FeatureStructure::set(std::string_view name, Value v) {
  if (Value* existing = find(name)) {
    *existing = std::move(v);
    return;
  }
  entries_.push_back(Entry{std::string(name), std::move(v)});
}

void FeatureStructure::erase(std::string_view name) {
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [&](const Entry& e) { return e.name == name; }),
                 entries_.end());
}

bool FeatureStructure::operator==(const FeatureStructure& o) const {
  return entries_ == o.entries_;
}

Path Path::parse(std::string_view dotted) {
  Path p;
  size_t start = 0;
  while (start <= dotted.size()) {
    size_t dot = dotted.find('.', start);
    if (dot == std::string_view::npos) dot = dotted.size();
    if (dot > start) p.segments.emplace_back(dotted.substr(start, dot - start));
    start = dot + 1;
  }
  if (p.segments.empty()) throw Error("bad-path", "empty feature path");
  return p;
}

std::string Path::dotted() const {
  std::string out;
  for (const auto& s : segments) {
    if (!out.empty()) out += '.';
    out += s;
  }
  return out;
}

const Value* get(const FeatureStructure& fs, const Path& path) {
  const FeatureStructure* cur = &fs;
  const Value* found = nullptr;
  for (size_t i = 0; i < path.segments.size(); ++i) {
    found = cur->find(path.segments[i]);
    if (!found) return nullptr;
    if (i + 1 < path.segments.size()) {
      if (!found->is_fs()) return nullptr;
      cur = &found->fs();
    }
  }
  return found;
}

namespace {

void put_into(FeatureStructure& fs, const Path& path, size_t idx, Value v,
              const Path& full) {
  const std::string& seg = path.segments[idx];
  if (idx + 1 == path.segments.size()) {
    fs.set(seg, std::move(v));
    return;
  }
  Value* child = fs.find(seg);
  if (!child) {
    fs.set(seg, Value(FeatureStructure{}));
    child = fs.find(seg);
  }
  if (!child->is_fs()) {
    throw Error("path-through-atom",
                "cannot descend through non-structure value at '" + seg +
                    "' while writing path " + full.dotted());
  }
  put_into(child->fs(), path, idx + 1, std::move(v), full);
}

}  // namespace

FeatureStructure put(FeatureStructure fs, const Path& path, Value v) {
  if (path.empty()) throw Error("bad-path", "put requires a nonempty path");
  put_into(fs, path, 0, std::move(v), path);
  return fs;
}

FeatureStructure remove_at(FeatureStructure fs, const Path& path) {
  if (path.empty()) throw Error("bad-path", "remove requires a nonempty path");
  FeatureStructure* cur = &fs;
  for (size_t i = 0; i + 1 < path.segments.size(); ++i) {
    Value* child = cur->find(path.segments[i]);
    if (!child || !child->is_fs()) return fs;  // nothing to delete
    cur = &child->fs();
  }
  cur->erase(path.segments.back());
  return fs;
}

bool constrain_eq(const FeatureStructure& fs, const Path& path, const Atom& expected) {
  const Value* v = get(fs, path);
  if (expected.name == kUndefined) return v == nullptr;
  if (!v || !v->is_atom()) return false;
  return v->atom() == expected;
}

namespace {

Value unify_values(const Value& a, const Value& b, Path& where);

FeatureStructure unify_fs(const FeatureStructure& a, const FeatureStructure& b, Path& where) {
  FeatureStructure out = a;
  for (const auto& e : b.entries()) {
    const Value* mine = out.find(e.name);
    if (!mine) {
      out.set(e.name, e.value);
      continue;
    }
    where.segments.push_back(e.name);
    Value merged = unify_values(*mine, e.value, where);
    where.segments.pop_back();
    out.set(e.name, std::move(merged));
  }
  return out;
}

Value unify_values(const Value& a, const Value& b, Path& where) {
  if (a.is_fs() && b.is_fs()) return Value(unify_fs(a.fs(), b.fs(), where));
  if (a == b) return a;
  throw Error("clash", "conflicting values at " +
                           (where.empty() ? std::string("<root>") : where.dotted()));
}

bool equivalent_values(const Value& a, const Value& b) {
  if (a.is_fs() && b.is_fs()) return equivalent(a.fs(), b.fs());
  if (a.is_list() && b.is_list()) {
    if (a.list().size() != b.list().size()) return false;
    for (size_t i = 0; i < a.list().size(); ++i) {
      if (!equivalent_values(a.list()[i], b.list()[i])) return false;
    }
    return true;
  }
  return a == b;
}

}  // namespace

FeatureStructure unify(const FeatureStructure& a, const FeatureStructure& b) {
  Path where;
  return unify_fs(a, b, where);
}

bool equivalent(const FeatureStructure& a, const FeatureStructure& b) {
  if (a.size() != b.size()) return false;
  for (const auto& e : a.entries()) {
    const Value* other = b.find(e.name);
    if (!other || !equivalent_values(e.value, *other)) return false;
  }
  return true;
}

}  // namespace serbest
