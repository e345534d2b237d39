package com.acme.shop.account;

public class AccountRepository {
    private Customer customer;
    private LoginSession loginSession;
    private Address address;

    public AccountRepository(Customer customer, LoginSession loginSession, Address address) {
        this.customer = customer;
        this.loginSession = loginSession;
        this.address = address;
    }

    public int accountCount() {
        return 3;
    }

    public Customer customer() {
        return customer;
    }
}
