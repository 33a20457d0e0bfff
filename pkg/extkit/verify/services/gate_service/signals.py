from blinker import signal

gate_evaluated = signal("gate_evaluated")
