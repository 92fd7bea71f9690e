# Models Package