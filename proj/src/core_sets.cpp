/*
 *   Copyright 2026 The rtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rtop/core_sets.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace rtop {

namespace {

std::size_t word_count(std::size_t n)
{
	return (n + Subset::kWordBits - 1) / Subset::kWordBits;
}

Subset::Word tail_mask(std::size_t n)
{
	const std::size_t rem = n % Subset::kWordBits;
	return rem == 0 ? ~Subset::Word{0} : (Subset::Word{1} << rem) - 1;
}

} // namespace

// Universe

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels))
{
	index_.reserve(labels_.size());
	for (std::size_t i = 0; i < labels_.size(); ++i)
		index_.emplace(labels_[i], i);
}

UniverseRef Universe::create(std::vector<std::string> labels)
{
	if (labels.empty())
		throw InvalidStructure("universe must contain at least one element");
	if (labels.size() > kMaxUniverseSize)
		throw CapExceeded("universe has " + std::to_string(labels.size()) +
		                  " elements; the cap is " + std::to_string(kMaxUniverseSize));
	std::unordered_map<std::string, std::size_t> seen;
	for (const auto &l : labels) {
		if (l.empty())
			throw InvalidStructure("element labels must be non-empty");
		if (!seen.emplace(l, 0).second)
			throw InvalidStructure("duplicate element label '" + l + "'");
	}
	return UniverseRef(new Universe(std::move(labels)));
}

UniverseRef Universe::numbered(std::size_t n)
{
	std::vector<std::string> labels;
	labels.reserve(n);
	for (std::size_t i = 1; i <= n; ++i)
		labels.push_back(std::to_string(i));
	return create(std::move(labels));
}

const std::string &Universe::label(std::size_t index) const
{
	if (index >= labels_.size())
		throw UnknownElement("element index " + std::to_string(index) + " out of range");
	return labels_[index];
}

std::size_t Universe::index_of(std::string_view label) const
{
	auto it = index_.find(std::string(label));
	if (it == index_.end())
		throw UnknownElement("unknown element '" + std::string(label) + "'");
	return it->second;
}

bool Universe::contains(std::string_view label) const
{
	return index_.find(std::string(label)) != index_.end();
}

bool same_universe(const UniverseRef &a, const UniverseRef &b) noexcept
{
	if (a == b)
		return true;
	if (!a || !b)
		return false;
	return *a == *b;
}

void require_same_universe(const UniverseRef &a, const UniverseRef &b)
{
	if (!same_universe(a, b))
		throw UniverseMismatch();
}

// Subset

Subset::Subset(UniverseRef u) : universe_(std::move(u))
{
	if (!universe_)
		throw InvalidStructure("subset requires a universe");
	words_.assign(word_count(universe_->size()), Word{0});
}

Subset Subset::empty(UniverseRef u)
{
	return Subset(std::move(u));
}

Subset Subset::full(UniverseRef u)
{
	Subset s(std::move(u));
	std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
	s.words_.back() &= tail_mask(s.universe_->size());
	return s;
}

Subset Subset::of(UniverseRef u, std::initializer_list<std::size_t> indices)
{
	Subset s(std::move(u));
	for (auto i : indices)
		s.insert(i);
	return s;
}

Subset Subset::from_indices(UniverseRef u, std::span<const std::size_t> indices)
{
	Subset s(std::move(u));
	for (auto i : indices)
		s.insert(i);
	return s;
}

Subset Subset::from_labels(UniverseRef u, std::span<const std::string> labels)
{
	Subset s(std::move(u));
	for (const auto &l : labels)
		s.insert(s.universe_->index_of(l));
	return s;
}

Subset Subset::from_word(UniverseRef u, Word bits)
{
	Subset s(std::move(u));
	if (s.words_.size() != 1)
		throw InvalidStructure("from_word requires a universe of at most 64 elements");
	if ((bits & ~tail_mask(s.universe_->size())) != 0)
		throw InvalidStructure("bit pattern has members outside the universe");
	s.words_[0] = bits;
	return s;
}

std::size_t Subset::universe_size() const noexcept
{
	return universe_->size();
}

void Subset::check_index(std::size_t index) const
{
	if (index >= universe_->size())
		throw UnknownElement("element index " + std::to_string(index) + " out of range");
}

void Subset::check_peer(const Subset &other) const
{
	require_same_universe(universe_, other.universe_);
}

bool Subset::contains(std::size_t index) const
{
	check_index(index);
	return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void Subset::insert(std::size_t index)
{
	check_index(index);
	words_[index / kWordBits] |= Word{1} << (index % kWordBits);
}

void Subset::erase(std::size_t index)
{
	check_index(index);
	words_[index / kWordBits] &= ~(Word{1} << (index % kWordBits));
}

std::size_t Subset::count() const noexcept
{
	std::size_t c = 0;
	for (auto w : words_)
		c += static_cast<std::size_t>(std::popcount(w));
	return c;
}

bool Subset::empty() const noexcept
{
	return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Subset::is_full() const noexcept
{
	return count() == universe_->size();
}

bool Subset::is_subset_of(const Subset &other) const
{
	check_peer(other);
	for (std::size_t i = 0; i < words_.size(); ++i)
		if ((words_[i] & ~other.words_[i]) != 0)
			return false;
	return true;
}

bool Subset::intersects(const Subset &other) const
{
	check_peer(other);
	for (std::size_t i = 0; i < words_.size(); ++i)
		if ((words_[i] & other.words_[i]) != 0)
			return true;
	return false;
}

Subset &Subset::operator|=(const Subset &other)
{
	check_peer(other);
	for (std::size_t i = 0; i < words_.size(); ++i)
		words_[i] |= other.words_[i];
	return *this;
}

Subset &Subset::operator&=(const Subset &other)
{
	check_peer(other);
	for (std::size_t i = 0; i < words_.size(); ++i)
		words_[i] &= other.words_[i];
	return *this;
}

Subset &Subset::operator-=(const Subset &other)
{
	check_peer(other);
	for (std::size_t i = 0; i < words_.size(); ++i)
		words_[i] &= ~other.words_[i];
	return *this;
}

Subset Subset::operator~() const
{
	Subset s(*this);
	for (auto &w : s.words_)
		w = ~w;
	s.words_.back() &= tail_mask(universe_->size());
	return s;
}

std::vector<std::size_t> Subset::indices() const
{
	std::vector<std::size_t> out;
	out.reserve(count());
	for_each([&](std::size_t i) { out.push_back(i); });
	return out;
}

std::vector<std::string> Subset::labels() const
{
	std::vector<std::string> out;
	out.reserve(count());
	for_each([&](std::size_t i) { out.push_back(universe_->label(i)); });
	return out;
}

bool operator==(const Subset &a, const Subset &b)
{
	return same_universe(a.universe_, b.universe_) &&
	       std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

std::strong_ordering operator<=>(const Subset &a, const Subset &b)
{
	a.check_peer(b);
	for (std::size_t i = a.words_.size(); i-- > 0;) {
		if (a.words_[i] != b.words_[i])
			return a.words_[i] <=> b.words_[i];
	}
	return std::strong_ordering::equal;
}

std::size_t Subset::hash() const noexcept
{
	std::size_t h = words_.size();
	for (auto w : words_)
		h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	return h;
}

Subset complement(const Subset &x)
{
	return ~x;
}

Subset union_of(const UniverseRef &u, std::span<const Subset> xs)
{
	Subset acc = Subset::empty(u);
	for (const auto &x : xs)
		acc |= x;
	return acc;
}

Subset intersection_of(const UniverseRef &u, std::span<const Subset> xs)
{
	Subset acc = Subset::full(u);
	for (const auto &x : xs)
		acc &= x;
	return acc;
}

bool is_subset(const Subset &x, const Subset &y)
{
	return x.is_subset_of(y);
}

// Powerset

Powerset::Powerset(UniverseRef u) : universe_(std::move(u))
{
	if (universe_->size() > kMaxPowersetSize)
		throw CapExceeded("powerset enumeration needs n <= " + std::to_string(kMaxPowersetSize) +
		                  ", got n = " + std::to_string(universe_->size()));
}

Powerset enumerate_powerset(const UniverseRef &u)
{
	return Powerset(u);
}

// SetFamily

SetFamily::SetFamily(UniverseRef u) : universe_(std::move(u)) {}

SetFamily::SetFamily(UniverseRef u, std::vector<Subset> members)
	: universe_(std::move(u)), members_(std::move(members))
{
	for (const auto &m : members_)
		require_same_universe(universe_, m.universe());
	std::sort(members_.begin(), members_.end());
	members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const Subset &s) const
{
	require_same_universe(universe_, s.universe());
	return std::binary_search(members_.begin(), members_.end(), s);
}

SetFamily SetFamily::with(const Subset &s) const
{
	auto members = members_;
	members.push_back(s);
	return SetFamily(universe_, std::move(members));
}

SetFamily SetFamily::without(const Subset &s) const
{
	auto members = members_;
	std::erase(members, s);
	return SetFamily(universe_, std::move(members));
}

bool operator==(const SetFamily &a, const SetFamily &b)
{
	return same_universe(a.universe_, b.universe_) && a.members_ == b.members_;
}

} // namespace rtop
