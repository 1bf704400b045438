from rulerunner.common.listener.monitor_listener import MonitorListener

__all__ = [
    "MonitorListener",
]
