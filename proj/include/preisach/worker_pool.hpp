#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace preisach {

// Fixed set of threads executing indexed tasks. The calling thread takes
// part in every batch, so a pool of size 1 owns no threads at all.
// Batches are serialized; tasks within a batch run in unspecified order and
// must write to disjoint outputs and must not throw.
class WorkerPool {
public:
    explicit WorkerPool(std::size_t workers);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    std::size_t size() const noexcept { return threads_.size() + 1; }

    // Runs task(0) .. task(count - 1) and returns once all have finished.
    void run(std::size_t count, const std::function<void(std::size_t)>& task);

private:
    void worker_loop();
    void drain();

    std::mutex batch_mutex_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    std::vector<std::jthread> threads_;

    const std::function<void(std::size_t)>* task_ = nullptr;
    std::size_t count_ = 0;
    std::size_t next_ = 0;
    std::size_t active_ = 0;
    std::size_t generation_ = 0;
    bool stopping_ = false;
};

} // namespace preisach
