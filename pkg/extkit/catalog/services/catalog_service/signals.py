from blinker import signal

gsolution_gated = signal("gsolution_gated")
