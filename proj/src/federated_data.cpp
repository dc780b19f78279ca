#include "fedsim/federated_data.hpp"

#include <algorithm>

#include "fedsim/errors.hpp"

namespace fedsim {

ClientDataset::ClientDataset(std::map<std::string, Tensor> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) {
    throw InvalidArgumentError("client dataset needs at least one column");
  }
  num_examples_ = columns_.begin()->second.leading_dim();
  for (const auto& [name, col] : columns_) {
    if (col.rank() == 0) {
      throw InvalidArgumentError("column '" + name +
                                 "' must have rank >= 1");
    }
    if (col.leading_dim() != num_examples_) {
      throw InvalidArgumentError(
          "column '" + name + "' has leading extent " +
          std::to_string(col.leading_dim()) + ", expected " +
          std::to_string(num_examples_));
    }
  }
}

const Tensor& ClientDataset::column(const std::string& name) const {
  auto it = columns_.find(name);
  if (it == columns_.end()) {
    throw InvalidArgumentError("no column named '" + name + "'");
  }
  return it->second;
}

bool ClientDataset::has_column(const std::string& name) const {
  return columns_.count(name) != 0;
}

void FederatedData::add_client(ClientId id, ClientDataset ds) {
  if (clients_.count(id)) {
    throw InvalidArgumentError("duplicate client id '" + id + "'");
  }
  clients_.emplace(std::move(id), std::move(ds));
}

const ClientDataset& FederatedData::client(const ClientId& id) const {
  auto it = clients_.find(id);
  if (it == clients_.end()) {
    throw InvalidArgumentError("no client with id '" + id + "'");
  }
  return it->second;
}

bool FederatedData::has_client(const ClientId& id) const {
  return clients_.count(id) != 0;
}

std::size_t FederatedData::client_size(const ClientId& id) const {
  return client(id).num_examples();
}

std::vector<ClientId> FederatedData::client_ids() const {
  std::vector<ClientId> ids;
  ids.reserve(clients_.size());
  for (const auto& [id, ds] : clients_) ids.push_back(id);
  return ids;
}

std::size_t FederatedData::total_examples() const {
  std::size_t n = 0;
  for (const auto& [id, ds] : clients_) n += ds.num_examples();
  return n;
}

std::vector<ClientId> sample_clients(const FederatedData& fd, std::size_t c,
                                     Rng rng) {
  if (c < 1) {
    throw InvalidArgumentError("sample_clients requires c >= 1");
  }
  if (c > fd.num_clients()) {
    throw CohortTooLargeError(
        "cohort size " + std::to_string(c) + " exceeds " +
        std::to_string(fd.num_clients()) + " clients");
  }
  std::vector<ClientId> ids = fd.client_ids();
  // Partial Fisher-Yates over the lexicographically sorted id list.
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t j = i + rng.next_below(ids.size() - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(c);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::map<std::size_t, std::size_t> client_stats(const FederatedData& fd) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& [id, ds] : fd.clients()) {
    ++hist[ds.num_examples()];
  }
  return hist;
}

}  // namespace fedsim
