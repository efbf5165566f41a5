"""
Timing helpers for harness runs
"""

import time


class Timer:
    """Accumulating wall-clock timer"""
    def __init__(self, name=None):
        """
        Args:
            name: Optional label used in the string form
        """
        self.name = name or "Timer"
        self.start_time = None
        self.elapsed = 0.0
        self.running = False

    def start(self):
        """Start the timer"""
        if not self.running:
            self.start_time = time.perf_counter()
            self.running = True
        return self

    def stop(self):
        """Stop the timer and accumulate the elapsed time"""
        if self.running:
            self.elapsed += time.perf_counter() - self.start_time
            self.running = False
        return self

    def reset(self):
        """Reset the timer"""
        self.start_time = None
        self.elapsed = 0.0
        self.running = False
        return self

    def get_elapsed(self):
        """
        Returns:
            Elapsed seconds, including the running interval
        """
        if self.running:
            return self.elapsed + (time.perf_counter() - self.start_time)
        return self.elapsed

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *args):
        self.stop()

    def __str__(self):
        return f"{self.name}: {self.get_elapsed():.4f} seconds"


class TimingStats:
    """Per-label timing summaries"""
    def __init__(self):
        self.timings = {}

    def record(self, name, elapsed):
        """
        Args:
            name: Label of the timed operation
            elapsed: Seconds
        """
        self.timings.setdefault(name, []).append(elapsed)

    def get_stats(self, name):
        """
        Args:
            name: Label of the timed operation

        Returns:
            Dictionary with count/total/min/max/avg, or None when nothing was recorded
        """
        times = self.timings.get(name)
        if not times:
            return None
        return {
            "count": len(times),
            "total": sum(times),
            "min": min(times),
            "max": max(times),
            "avg": sum(times) / len(times)
        }

    def get_report(self):
        """
        Returns:
            Multi-line timing report
        """
        report = ["Timing Statistics:"]
        for name in sorted(self.timings):
            stats = self.get_stats(name)
            report.append(
                f"  {name}: n={stats['count']} total={stats['total']:.3f}s "
                f"avg={stats['avg']:.4f}s max={stats['max']:.4f}s"
            )
        return "\n".join(report)
