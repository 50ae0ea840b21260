/*
   Copyright 2026 The cymcm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cymcm/error.hpp"

namespace cymcm::toml {

/**
 * The TOML subset the manifests use: tables, arrays of tables, key-value
 * pairs with integer / boolean / string / array / inline-table values.
 * Floating-point literals are rejected on purpose: manifests must stay exact.
 */
class Value {
   public:
    using Array = std::vector<Value>;
    using Table = std::map<std::string, Value>;

    Value() : data_(Table{}) {}
    explicit Value(long long v) : data_(v) {}
    explicit Value(bool v) : data_(v) {}
    explicit Value(std::string v) : data_(std::move(v)) {}
    explicit Value(Array v) : data_(std::move(v)) {}
    explicit Value(Table v) : data_(std::move(v)) {}

    bool is_int() const { return std::holds_alternative<long long>(data_); }
    bool is_bool() const { return std::holds_alternative<bool>(data_); }
    bool is_string() const { return std::holds_alternative<std::string>(data_); }
    bool is_array() const { return std::holds_alternative<Array>(data_); }
    bool is_table() const { return std::holds_alternative<Table>(data_); }

    long long as_int() const { return get<long long>("integer"); }
    bool as_bool() const { return get<bool>("boolean"); }
    const std::string& as_string() const { return get<std::string>("string"); }
    const Array& as_array() const { return get<Array>("array"); }
    const Table& as_table() const { return get<Table>("table"); }
    Array& as_array() { return std::get<Array>(data_); }
    Table& as_table() { return std::get<Table>(data_); }

    bool contains(const std::string& key) const { return as_table().count(key) > 0; }

    const Value& at(const std::string& key) const {
        auto it = as_table().find(key);
        if (it == as_table().end()) throw error("missing manifest key '" + key + "'");
        return it->second;
    }

    const Value* find(const std::string& key) const {
        auto it = as_table().find(key);
        return it == as_table().end() ? nullptr : &it->second;
    }

    friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

    /// Canonical one-line rendering used for exact computed/expected comparison:
    /// tables print as "k1=v1 k2=v2" with keys in sorted order.
    std::string canonical() const {
        std::ostringstream os;
        print(os);
        return os.str();
    }

   private:
    template <class T>
    const T& get(const char* what) const {
        if (!std::holds_alternative<T>(data_))
            throw error(std::string("manifest value is not a ") + what + ": " + canonical());
        return std::get<T>(data_);
    }

    void print(std::ostringstream& os) const {
        if (is_int()) {
            os << std::get<long long>(data_);
        } else if (is_bool()) {
            os << (std::get<bool>(data_) ? "true" : "false");
        } else if (is_string()) {
            os << std::get<std::string>(data_);
        } else if (is_array()) {
            os << "[";
            const auto& a = std::get<Array>(data_);
            for (size_t i = 0; i < a.size(); ++i) {
                if (i) os << ", ";
                a[i].print(os);
            }
            os << "]";
        } else {
            bool first = true;
            for (const auto& [k, v] : std::get<Table>(data_)) {
                if (!first) os << " ";
                first = false;
                os << k << "=";
                v.print(os);
            }
        }
    }

    std::variant<long long, bool, std::string, Array, Table> data_;
};

namespace detail {

class TomlParser {
   public:
    explicit TomlParser(std::string text) : src_(std::move(text)) {}

    Value parse() {
        Value root;
        Value::Table* current = &root.as_table();
        skip_filler();
        while (!eof()) {
            if (peek() == '[') {
                current = parse_header(root);
            } else {
                auto [key, value] = parse_key_value();
                if (!current->emplace(std::move(key), std::move(value)).second)
                    fail("duplicate key");
                end_of_line();
            }
            skip_filler();
        }
        return root;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, col_); }

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_spaces() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }

    /// Spaces, newlines and comments between statements.
    void skip_filler() {
        for (;;) {
            skip_spaces();
            if (!eof() && peek() == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (!eof() && peek() == '\n') {
                advance();
            } else {
                return;
            }
        }
    }

    void end_of_line() {
        skip_spaces();
        if (!eof() && peek() == '#')
            while (!eof() && peek() != '\n') advance();
        if (!eof() && peek() != '\n') fail("expected end of line");
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    static bool is_bare(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '-';
    }

    std::string parse_key() {
        skip_spaces();
        if (!eof() && peek() == '"') return parse_string();
        std::string key;
        while (!eof() && is_bare(peek())) key += advance();
        if (key.empty()) fail("expected a key");
        return key;
    }

    Value::Table* parse_header(Value& root) {
        expect('[');
        const bool array_of_tables = !eof() && peek() == '[';
        if (array_of_tables) advance();
        const std::string name = parse_key();
        expect(']');
        if (array_of_tables) expect(']');
        end_of_line();

        auto& table = root.as_table();
        if (array_of_tables) {
            auto [it, inserted] = table.emplace(name, Value(Value::Array{}));
            if (!inserted && !it->second.is_array()) fail("'" + name + "' is not an array of tables");
            auto& arr = it->second.as_array();
            arr.emplace_back();
            return &arr.back().as_table();
        }
        auto [it, inserted] = table.emplace(name, Value());
        if (!inserted) fail("table '" + name + "' redefined");
        return &it->second.as_table();
    }

    std::pair<std::string, Value> parse_key_value() {
        std::string key = parse_key();
        skip_spaces();
        expect('=');
        skip_spaces();
        return {std::move(key), parse_value()};
    }

    Value parse_value() {
        if (eof()) fail("expected a value");
        const char c = peek();
        if (c == '"') return Value(parse_string());
        if (c == '[') return parse_array();
        if (c == '{') return parse_inline_table();
        if (c == 't' || c == 'f') return parse_boolean();
        if (c == '+' || c == '-' || (c >= '0' && c <= '9')) return parse_integer();
        fail("unexpected character in value");
    }

    std::string parse_string() {
        expect('"');
        std::string s;
        while (!eof() && peek() != '"') {
            char c = advance();
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                const char e = advance();
                switch (e) {
                    case 'n': c = '\n'; break;
                    case 't': c = '\t'; break;
                    case '"': c = '"'; break;
                    case '\\': c = '\\'; break;
                    default: fail("unsupported escape sequence");
                }
            } else if (c == '\n') {
                fail("unterminated string");
            }
            s += c;
        }
        expect('"');
        return s;
    }

    Value parse_boolean() {
        if (src_.compare(pos_, 4, "true") == 0) {
            for (int i = 0; i < 4; ++i) advance();
            return Value(true);
        }
        if (src_.compare(pos_, 5, "false") == 0) {
            for (int i = 0; i < 5; ++i) advance();
            return Value(false);
        }
        fail("expected a boolean");
    }

    Value parse_integer() {
        std::string digits;
        if (peek() == '+' || peek() == '-') digits += advance();
        while (!eof() && peek() >= '0' && peek() <= '9') digits += advance();
        if (digits.empty() || digits == "+" || digits == "-") fail("expected an integer");
        if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
            fail("floating-point values are not allowed in manifests");
        try {
            return Value(std::stoll(digits));
        } catch (...) {
            fail("integer out of range");
        }
    }

    Value parse_array() {
        expect('[');
        Value::Array items;
        for (;;) {
            skip_filler();
            if (eof()) fail("unterminated array");
            if (peek() == ']') {
                advance();
                break;
            }
            items.push_back(parse_value());
            skip_filler();
            if (!eof() && peek() == ',') {
                advance();
            } else if (!eof() && peek() == ']') {
                advance();
                break;
            } else {
                fail("expected ',' or ']' in array");
            }
        }
        return Value(std::move(items));
    }

    Value parse_inline_table() {
        expect('{');
        Value::Table table;
        skip_filler();
        if (!eof() && peek() == '}') {
            advance();
            return Value(std::move(table));
        }
        for (;;) {
            skip_filler();
            auto [key, value] = parse_key_value();
            if (!table.emplace(std::move(key), std::move(value)).second) fail("duplicate key");
            skip_filler();
            if (eof()) fail("unterminated inline table");
            if (peek() == ',') {
                advance();
            } else if (peek() == '}') {
                advance();
                return Value(std::move(table));
            } else {
                fail("expected ',' or '}' in inline table");
            }
        }
    }

    friend class ::cymcm::toml::Value;

    std::string src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace detail

inline Value parse(const std::string& text) { return detail::TomlParser(text).parse(); }

inline Value parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open manifest file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace cymcm::toml
