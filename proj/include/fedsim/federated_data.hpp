#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fedsim/rng.hpp"
#include "fedsim/tensor.hpp"

namespace fedsim {

using ClientId = std::string;

// Columnar example store for one client. Every column's leading extent is
// num_examples; columns iterate in lexicographic name order.
class ClientDataset {
 public:
  ClientDataset() = default;
  explicit ClientDataset(std::map<std::string, Tensor> columns);

  const std::map<std::string, Tensor>& columns() const { return columns_; }
  const Tensor& column(const std::string& name) const;
  bool has_column(const std::string& name) const;
  std::size_t num_examples() const { return num_examples_; }

  bool operator==(const ClientDataset& other) const {
    return columns_ == other.columns_;
  }

 private:
  std::map<std::string, Tensor> columns_;
  std::size_t num_examples_ = 0;
};

// Ordered map from client id to local dataset; iteration is lexicographic
// by id everywhere, which keeps downstream order reproducible.
class FederatedData {
 public:
  FederatedData() = default;

  void add_client(ClientId id, ClientDataset ds);

  const std::map<ClientId, ClientDataset>& clients() const { return clients_; }
  const ClientDataset& client(const ClientId& id) const;
  bool has_client(const ClientId& id) const;
  std::size_t num_clients() const { return clients_.size(); }
  std::size_t client_size(const ClientId& id) const;
  std::vector<ClientId> client_ids() const;
  std::size_t total_examples() const;

  bool operator==(const FederatedData& other) const {
    return clients_ == other.clients_;
  }

 private:
  std::map<ClientId, ClientDataset> clients_;
};

// c distinct ids, sampled uniformly without replacement, returned sorted
// lexicographically. Deterministic in rng.
std::vector<ClientId> sample_clients(const FederatedData& fd, std::size_t c,
                                     Rng rng);

// Histogram of client dataset sizes: size -> number of clients.
std::map<std::size_t, std::size_t> client_stats(const FederatedData& fd);

}  // namespace fedsim
