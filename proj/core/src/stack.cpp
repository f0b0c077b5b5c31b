#include "fixpoint/stack.hpp"

#include <pthread.h>

#include <stdexcept>

namespace fixpoint {

namespace {
struct Job {
  const std::function<int()>* fn;
  int result = 0;
  std::exception_ptr error;
};

void* trampoline(void* p) {
  auto* job = static_cast<Job*>(p);
  try {
    job->result = (*job->fn)();
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}
}  // namespace

int run_with_large_stack(const std::function<int()>& fn, std::size_t bytes) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  Job job{&fn, 0, nullptr};
  pthread_t thread;
  if (pthread_create(&thread, &attr, trampoline, &job) != 0) {
    pthread_attr_destroy(&attr);
    return fn();
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  if (job.error) std::rethrow_exception(job.error);
  return job.result;
}

}  // namespace fixpoint
