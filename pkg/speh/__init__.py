# Exact arithmetic for halos, generalized seminorms and harmonious spectra.
# Flask wiring lives in factory.py; the command line in cli.py.
