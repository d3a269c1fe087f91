#include "spinhurwitz/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw DomainError("partition must have at least one part");
  }
  for (int part : parts_) {
    if (part < 1) {
      throw DomainError("partition parts must be positive");
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::trivial(int d) {
  if (d < 1) {
    throw DomainError("trivial partition needs d >= 1");
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

Partition Partition::rectangular(int part, int count) {
  if (count < 1) {
    throw DomainError("rectangular partition needs count >= 1");
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

namespace {

int parse_positive_int(const std::string& token) {
  if (token.empty()) {
    throw std::invalid_argument("empty number in partition");
  }
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed partition token: '" + token + "'");
    }
  }
  // parts stay small (degree <= a few dozen); overflow here means garbage input
  if (token.size() > 6) {
    throw std::invalid_argument("partition part out of range: '" + token + "'");
  }
  return std::stoi(token);
}

}  // namespace

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::size_t caret = token.find('^');
    if (caret == std::string::npos) {
      parts.push_back(parse_positive_int(token));
      continue;
    }
    const int part = parse_positive_int(token.substr(0, caret));
    const int count = parse_positive_int(token.substr(caret + 1));
    if (count < 1) {
      throw std::invalid_argument("partition power must be positive: '" + token + "'");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(count), part);
  }
  if (parts.empty()) {
    throw std::invalid_argument("empty partition: '" + text + "'");
  }
  for (int part : parts) {
    if (part < 1) {
      throw std::invalid_argument("partition parts must be positive: '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

bool Partition::is_trivial() const { return parts_.front() == 1; }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& current,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(current));
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    emit_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_degree) {
  if (d < 1 || d > max_degree) {
    throw DomainError("partitions_of: d out of range [1, " + std::to_string(max_degree) + "]");
  }
  std::vector<Partition> out;
  std::vector<int> current;
  emit_partitions(d, d, current, out);
  return out;
}

bool is_odd_partition(const Partition& m) {
  for (int part : m.parts()) {
    if (part % 2 == 0) {
      return false;
    }
  }
  return true;
}

bool is_strict(const Partition& m) {
  // canonical order: equal parts are adjacent
  for (int i = 0; i + 1 < m.length(); ++i) {
    if (m.parts()[i] == m.parts()[i + 1]) {
      return false;
    }
  }
  return true;
}

PartitionStats stats(const Partition& m) {
  PartitionStats result;
  result.aut_order = 1;
  result.prod_parts = 1;
  int run = 0;
  for (int i = 0; i < m.length(); ++i) {
    result.prod_parts *= m.parts()[i];
    ++run;
    const bool run_ends = (i + 1 == m.length()) || (m.parts()[i + 1] != m.parts()[i]);
    if (run_ends) {
      result.aut_order *= factorial(run);
      run = 0;
    }
  }
  result.centralizer = result.prod_parts * result.aut_order;
  const Int order = factorial(m.sum());
  result.class_size = order / result.centralizer;
  if (result.class_size * result.centralizer != order) {
    throw DomainError("centralizer does not divide the group order");  // unreachable
  }
  return result;
}

}  // namespace spinhurwitz
