#pragma once

#include <json.hpp>

#include <initializer_list>
#include <string>

#include "relcone/algebra/abelian_group.hpp"
#include "relcone/cech/nerve.hpp"
#include "relcone/simplicial/map.hpp"

namespace relcone::jobs {

using nlohmann::json;

/// Payload does not match the job schema. path is a JSON pointer into the job document.
class SchemaError : public ValidationError {
public:
    SchemaError(std::string path, const std::string& message)
        : ValidationError(path + ": " + message), path_(std::move(path)), message_(message)
    {
    }
    const std::string& path() const { return path_; }
    const std::string& message() const { return message_; }

private:
    std::string path_, message_;
};

/// A JSON value together with its location in the job document.
class Node {
public:
    Node(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

    const json& value() const { return *value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& message) const { throw SchemaError(path_, message); }

    /// Requires an object whose keys all appear in `allowed`.
    void expect_object(std::initializer_list<const char*> allowed) const;
    bool has(const std::string& key) const;
    Node operator[](const std::string& key) const; // required member
    Node at(std::size_t i) const;
    std::size_t size() const; // array length

    std::string as_string() const;
    long as_int(long lo, long hi) const;
    bool as_bool() const;
    Integer as_integer() const;
    /// Integer, or a string "p/q" / "p".
    Rational as_rational() const;
    RationalVector as_rational_vector() const;
    std::vector<std::size_t> as_index_list() const;

private:
    const json* value_;
    std::string path_;
};

/// Built-in name, {"vertices": n, "facets": [[...]]} or {"vertices": n, "cells": [dim 1 faces, dim 2 faces, ...]}.
DeltaComplex parse_space(const Node& n);
/// Built-in name or {"source": space, "target": space, "vertex_map": [...]}.
SimplicialMap parse_map(const Node& n);
/// {"size": n, "families": [[...], ...]} or {"simplex": n, "skeleton": k}.
Nerve parse_nerve(const Node& n);
/// {"source": nerve, "target": nerve, "refinement": [...]}.
CoverMap parse_cover_map(const Node& n);

json group_json(const AbelianGroupPresentation& g);
json rational_json(const Rational& q);
json rational_vector_json(const RationalVector& v);
json integer_vector_json(const IntegerVector& v);

} // namespace relcone::jobs
