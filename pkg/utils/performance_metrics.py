"""
Resource tracking for table reproductions
"""

import os
import time

import psutil


def _format_bytes(count):
    size = abs(count)
    sign = "-" if count < 0 else ""
    if size > 1024 ** 3:
        return f"{sign}{size / 1024 ** 3:.2f} GB"
    if size > 1024 ** 2:
        return f"{sign}{size / 1024 ** 2:.2f} MB"
    if size > 1024:
        return f"{sign}{size / 1024:.2f} KB"
    return f"{sign}{size} bytes"


class PerformanceMetrics:
    """Wall time, resident memory and throughput per named run"""
    def __init__(self):
        self.metrics = {}
        self.process = psutil.Process(os.getpid())

    def start_timer(self, name):
        """
        Args:
            name: Name of the run, e.g. a table id
        """
        rss = self.process.memory_info().rss
        self.metrics[name] = {
            "start_time": time.perf_counter(),
            "start_memory": rss,
            "peak_memory": rss,
            "replications": 0
        }

    def stop_timer(self, name):
        """Close the run and record elapsed time and memory growth"""
        data = self.metrics.get(name)
        if data is None:
            return
        rss = self.process.memory_info().rss
        data["elapsed_time"] = time.perf_counter() - data["start_time"]
        data["memory_used"] = rss - data["start_memory"]
        data["peak_memory"] = max(data["peak_memory"], rss)

    def record_replications(self, name, count):
        """
        Add finished replications to a run.

        Args:
            name: Name of the run
            count: Replications completed since the last call
        """
        data = self.metrics.get(name)
        if data is not None:
            data["replications"] += count
            data["peak_memory"] = max(data["peak_memory"], self.process.memory_info().rss)

    def get_report(self):
        """
        Returns:
            Multi-line report of every run
        """
        report = ["Performance Metrics:"]
        for name, data in self.metrics.items():
            elapsed = data.get("elapsed_time")
            report.append(f"\n{name}:")
            if elapsed is None:
                report.append("  Time: running")
                continue
            report.append(f"  Time: {elapsed:.4f} seconds")
            report.append(f"  Replications: {data['replications']}")
            report.append(f"  Memory growth: {_format_bytes(data['memory_used'])}")
            report.append(f"  Peak resident memory: {_format_bytes(data['peak_memory'])}")
            if elapsed > 0 and data["replications"]:
                report.append(f"  Replications per second: {data['replications'] / elapsed:.2f}")
        return "\n".join(report)
