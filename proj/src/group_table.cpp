#include "cap2/group_table.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cap2 {

namespace {

constexpr Id kUnset = std::numeric_limits<Id>::max();

Subgroup to_sorted(const std::vector<bool>& member) {
  Subgroup out;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(static_cast<Id>(i));
  return out;
}

struct CosetData {
  GroupTable parent;
  std::vector<Id> coset_of;
  std::vector<Id> reps;
};

GroupTable quotient_impl(const GroupTable& group, const Subgroup& sub) {
  auto data = std::make_shared<CosetData>(CosetData{group, std::vector<Id>(group.size(), kUnset), {}});
  auto open_coset = [&](Id rep) {
    const auto index = static_cast<Id>(data->reps.size());
    data->reps.push_back(rep);
    for (Id h : sub) {
      Id x = group.mul(rep, h);
      if (data->coset_of[x] != kUnset && data->coset_of[x] != index)
        throw std::logic_error("overlapping cosets");
      data->coset_of[x] = index;
    }
  };
  open_coset(group.identity());
  for (std::size_t q = 0; q < data->reps.size(); ++q) {
    for (Id g : group.generators()) {
      Id x = group.mul(data->reps[q], g);
      if (data->coset_of[x] == kUnset) open_coset(x);
    }
  }
  const std::size_t n = data->reps.size();
  if (n * sub.size() != group.size()) throw std::logic_error("coset enumeration incomplete");
  std::array<Id, 2> gens{data->coset_of[group.generators()[0]], data->coset_of[group.generators()[1]]};
  return GroupTable(
      n, data->coset_of[group.identity()], gens,
      [data](Id x, Id y) { return data->coset_of[data->parent.mul(data->reps[x], data->reps[y])]; },
      [data](Id x) { return data->parent.label(data->reps[x]) + "*Z"; });
}

}  // namespace

GroupTable::GroupTable(std::size_t order, Id identity, std::array<Id, 2> generators, MulFn mul,
                       LabelFn label)
    : order_(order), identity_(identity), generators_(generators), mul_(std::move(mul)), label_(std::move(label)) {
  if (order_ == 0 || order_ > std::size_t{kUnset}) throw std::invalid_argument("bad group order");
  if (order_ <= kMemoLimit) {
    auto memo = std::make_shared<std::vector<Id>>(order_ * order_);
    for (std::size_t x = 0; x < order_; ++x)
      for (std::size_t y = 0; y < order_; ++y) (*memo)[x * order_ + y] = mul_(static_cast<Id>(x), static_cast<Id>(y));
    memo_ = std::move(memo);
  }
  if (closure(*this, generators_).size() != order_)
    throw std::invalid_argument("designated generators do not generate the group");
}

Int GroupTable::order_of(Id x) const {
  Int order = 1;
  for (int k = 0; k < 63; ++k) {
    if (x == identity_) return order;
    x = mul(x, x);
    order *= 2;
  }
  throw std::logic_error("element order is not a power of two");
}

Id GroupTable::power(Id x, Int n) const {
  if (n < 0) return power(inverse(x), -n);
  Id result = identity_;
  while (n > 0) {
    if (n & 1) result = mul(result, x);
    n >>= 1;
    if (n > 0) x = mul(x, x);
  }
  return result;
}

Id GroupTable::inverse(Id x) const { return power(x, order_of(x) - 1); }

Id GroupTable::commutator(Id x, Id y) const { return mul(mul(inverse(x), inverse(y)), mul(x, y)); }

std::string GroupTable::label(Id x) const { return label_ ? label_(x) : "#" + std::to_string(x); }

Subgroup closure(const GroupTable& group, std::span<const Id> generators) {
  std::vector<bool> member(group.size(), false);
  std::deque<Id> queue{group.identity()};
  member[group.identity()] = true;
  while (!queue.empty()) {
    Id x = queue.front();
    queue.pop_front();
    for (Id g : generators) {
      Id y = group.mul(x, g);
      if (!member[y]) {
        member[y] = true;
        queue.push_back(y);
      }
    }
  }
  return to_sorted(member);
}

Subgroup normal_closure(const GroupTable& group, std::span<const Id> generators) {
  std::vector<Id> gens(generators.begin(), generators.end());
  for (;;) {
    Subgroup h = closure(group, gens);
    std::vector<bool> member(group.size(), false);
    for (Id x : h) member[x] = true;
    bool stable = true;
    for (Id x : h) {
      for (Id g : group.generators()) {
        Id conj = group.mul(group.mul(group.inverse(g), x), g);
        if (!member[conj]) {
          gens.push_back(conj);
          member[conj] = true;
          stable = false;
        }
      }
    }
    if (stable) return h;
  }
}

Subgroup brute_center(const GroupTable& group) {
  const std::size_t n = group.size();
  std::vector<bool> member(n, false);
  for (std::size_t z = 0; z < n; ++z) {
    bool central = true;
    if (n <= kPairwiseCenterLimit) {
      for (std::size_t g = 0; g < n && central; ++g) central = group.commute(static_cast<Id>(z), static_cast<Id>(g));
    } else {
      for (Id g : group.generators()) central = central && group.commute(static_cast<Id>(z), g);
    }
    member[z] = central;
  }
  return to_sorted(member);
}

GroupTable quotient_central(const GroupTable& group, const Subgroup& central) {
  for (Id z : central)
    for (Id g : group.generators())
      if (!group.commute(z, g)) throw std::invalid_argument("subgroup passed to quotient_central is not central");
  return quotient_impl(group, central);
}

GroupTable quotient_normal(const GroupTable& group, const Subgroup& normal) {
  std::vector<bool> member(group.size(), false);
  for (Id x : normal) member[x] = true;
  for (Id x : normal)
    for (Id g : group.generators())
      if (!member[group.mul(group.mul(group.inverse(g), x), g)])
        throw std::invalid_argument("subgroup passed to quotient_normal is not normal");
  return quotient_impl(group, normal);
}

std::vector<Subgroup> lcs(const GroupTable& group) {
  Subgroup all(group.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Id>(i);
  std::vector<Subgroup> series{all};
  while (series.back().size() > 1) {
    std::vector<Id> comms;
    for (Id x : series.back())
      for (Id g : group.generators()) comms.push_back(group.commutator(x, g));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Subgroup next = normal_closure(group, comms);
    if (next.size() == series.back().size()) throw std::runtime_error("lower central series stalls");
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const GroupTable& group) { return static_cast<int>(lcs(group).size()) - 1; }

}  // namespace cap2
