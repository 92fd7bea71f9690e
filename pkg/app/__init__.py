# Brake Index Application Package